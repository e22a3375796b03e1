#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnoidal/model.hpp"

namespace cnoidal {

// Branch of R = +-sqrt(m^4 - m^2 + 1).
enum class RSign { plus = +1, minus = -1 };

// The two solitary branches, m = R = 1 and m = -R = 1; the m -> 1
// limit of the cnoidal family with RSign::plus / RSign::minus respectively.
enum class SolitaryBranch { m_r_one, m_neg_r_one };

double big_r(double m, RSign sign);

// Admissibility of (kind, phys, sigma): the per-system wave-speed window plus
// the sign of lambda^2 for each R branch (the latter is independent of m).
struct ValidityReport {
  bool sigma_valid = false;
  std::string violated;  // the failing inequality, empty when sigma_valid
  bool lambda2_positive_plus = false;
  bool lambda2_positive_minus = false;

  bool feasible(RSign s) const {
    return sigma_valid &&
           (s == RSign::plus ? lambda2_positive_plus : lambda2_positive_minus);
  }
};

ValidityReport validity(SystemKind kind, const PhysicalParams& phys, double sigma);

// Exact cnoidal traveling wave: f = d0 + d2 cn^2, g = h0 + h2 cn^2 at
// (lambda xi, m), u = e^{i omega t} e^{i B xi} f, v = g.
struct CnoidalSolution {
  SystemKind kind{};
  PhysicalParams phys;
  WaveParams wave;
  ProfileCoeffs prof;
  double R = 1.0;
};

CnoidalSolution cnoidal_params(SystemKind kind, const PhysicalParams& phys,
                               double sigma, double m, RSign sign);

// Solitary (sech^2) limit: f = d0 + d2 sech^2(lambda xi), g = h0 + h2 sech^2.
struct SolitarySolution {
  SystemKind kind{};
  PhysicalParams phys;
  SolitaryBranch branch{};
  double B = 0, omega = 0, sigma = 1, lambda = 1;
  double d0 = 0, d2 = 0, h0 = 0, h2 = 0;
};

SolitarySolution solitary_limit(SystemKind kind, const PhysicalParams& phys,
                                double sigma, SolitaryBranch branch);

// The closed-form h2/d2 ratio quoted for each system.
double quoted_ratio(SystemKind kind, const PhysicalParams& phys, double sigma);

// Residual of the condition under which the solitary limit has vanishing
// constant long-wave offset (synchronized solution recovery).  The candidate
// is sigma for the KdV-dispersed u systems and B for the BBM-dispersed ones;
// KdV-KdV also carries the closed-form root sigma*.
struct SyncReport {
  double residual = 0;
  std::optional<double> exact_sigma;
  char constrained = 's';  // 's' = sigma, 'B' = B
};

SyncReport synchronized_condition(SystemKind kind, const PhysicalParams& phys,
                                  double candidate);

// One catalog entry of trivial / semi-trivial solutions.  `family` is the
// 1-based index in the per-system list; `free` holds the free parameters
// used, `derived` the constrained ones.
struct SemiTrivialSolution {
  SystemKind kind{};
  int family = 1;
  PhysicalParams phys;
  ProfileCoeffs prof;
  WaveParams wave;
  std::map<std::string, double> free;
  std::map<std::string, double> derived;
};

using ParamMap = std::map<std::string, double>;

int semi_trivial_family_count(SystemKind kind);

// Throws ConstraintError naming the violated inequality.
SemiTrivialSolution semi_trivial_family(SystemKind kind, const PhysicalParams& phys,
                                        int family, const ParamMap& free);

std::vector<SemiTrivialSolution> semi_trivial_catalog(SystemKind kind,
                                                      const PhysicalParams& phys,
                                                      const ParamMap& free);

// Profile and field evaluation.
std::pair<double, double> evaluate_profiles(const CnoidalSolution& sol, double xi);
std::pair<double, double> evaluate_profiles(const SolitarySolution& sol, double xi);
std::pair<double, double> evaluate_profiles(const SemiTrivialSolution& sol, double xi);

std::pair<std::complex<double>, double> evaluate_fields(const CnoidalSolution& sol,
                                                        double x, double t);
std::pair<std::complex<double>, double> evaluate_fields(const SolitarySolution& sol,
                                                        double x, double t);
std::pair<std::complex<double>, double> evaluate_fields(const SemiTrivialSolution& sol,
                                                        double x, double t);

// Smallest period of the (f, g) pair: 2K/lambda when the cn^1 coefficients
// vanish, 4K/lambda otherwise.
double fundamental_period(const ProfileCoeffs& prof, const WaveParams& wave);
double fundamental_period(const CnoidalSolution& sol);
double fundamental_period(const SemiTrivialSolution& sol);

}  // namespace cnoidal
