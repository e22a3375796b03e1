#pragma once

#include <map>
#include <string>
#include <vector>

#include "cnoidal/model.hpp"
#include "cnoidal/solutions.hpp"

namespace cnoidal {

// Result of one residual battery.  max_abs and rms are scaled residuals
// (each raw entry divided by the largest |term| that contributed to it);
// passed <=> max_abs <= tolerance.  worst_location is xi (or x) for grid
// checks and 10*j + q for coefficient checks.
struct ResidualReport {
  std::string check;
  double max_abs = 0;
  double rms = 0;
  int grid_size = 0;
  double tolerance = 0;
  bool passed = false;
  double worst_location = 0;
  double richardson_slope = 0;  // pde check only, 0 otherwise

  std::string to_json() const;
};

// m -> 1 coefficient convergence toward the matching solitary branch.
struct ConvergenceReport {
  std::vector<double> m_values;
  std::vector<double> gaps;  // max over coefficients of the relative gap
  std::map<std::string, std::vector<double>> coefficient_gaps;
  double slope = 0;  // fit of log(gap) against log(1 - m)

  bool monotone() const;
};

// Default tolerances; every verify_* accepts an override.  CNOIDAL_TOL, when
// set, replaces all of them.
struct Tolerances {
  double coefficients = 1e-9;
  double ode = 1e-8;
  double pde = 1e-5;
  double ratio = 1e-12;

  static Tolerances from_env();
};

ResidualReport verify_coefficients(const CnoidalSolution& sol, double tol = 1e-9);

ResidualReport verify_ode(const CnoidalSolution& sol, int n_points, double tol = 1e-8);
ResidualReport verify_ode(const SolitarySolution& sol, int n_points, double tol = 1e-8);
ResidualReport verify_ode(const SemiTrivialSolution& sol, int n_points,
                          double tol = 1e-8);

// Finite-difference PDE residuals on grid.x at grid.t, plus a Richardson
// slope from an internal h/2 pass; passes when both the scaled residual and
// the slope criteria hold.
ResidualReport verify_pde(const CnoidalSolution& sol, const SampleGrid& grid, double h,
                          double tol = 1e-5, double min_slope = 3.5);
ResidualReport verify_pde(const SemiTrivialSolution& sol, const SampleGrid& grid,
                          double h, double tol = 1e-5, double min_slope = 3.5);

ConvergenceReport verify_limit(SystemKind kind, const PhysicalParams& phys,
                               double sigma, RSign sign);

ResidualReport verify_ratio(const CnoidalSolution& sol, double tol = 1e-12);

}  // namespace cnoidal
