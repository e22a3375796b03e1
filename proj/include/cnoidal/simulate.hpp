#pragma once

#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "cnoidal/model.hpp"
#include "cnoidal/solutions.hpp"

namespace cnoidal {

// Fourier pseudo-spectral method-of-lines configuration.  domain_length = 0
// means one fundamental period of the solution; any integer multiple is also
// a valid explicit choice.
struct SpectralConfig {
  int n_modes = 256;       // power of two, >= 16
  double domain_length = 0;
  double dt = 1e-3;
  double t_end = 1.0;
  bool dealias = true;     // 2/3 rule on the quadratic products
  int n_records = 33;      // recorded output times (including t = 0)
};

struct PropagationReport {
  double linf_error_u = 0;
  double linf_error_v = 0;
  std::vector<double> times;
  std::vector<std::array<double, 2>> errors_over_time;  // (err_u, err_v)
  std::vector<double> mass_drift_over_time;  // |integral v - initial| per record
  double conserved_drift = 0;                // max of the above
};

// Max drift of the integral of v across stored grid states.
double conservation_probe(const std::vector<std::vector<double>>& v_states,
                          double domain_length);

// Evolves w(x,t) = e^{-iBx} u(x,t) and v(x,t) on a periodic domain.  The
// gauge shift moves the non-periodic phase e^{iBx} into the wavenumbers
// (k -> k + B); BBM-type equations invert their (1 + coeff k^2) symbol in
// Fourier space.  Time stepping is classical RK4, switched to the
// integrating-factor variant when the linear dispersive symbol is stiff on
// the step (max |L| dt > 1).
class SpectralIntegrator {
 public:
  struct State {
    std::vector<std::complex<double>> w;
    std::vector<double> v;
    double t = 0;
  };

  SpectralIntegrator(SystemKind kind, const PhysicalParams& phys, double b_shift,
                     const SpectralConfig& cfg);
  ~SpectralIntegrator();
  SpectralIntegrator(const SpectralIntegrator&) = delete;
  SpectralIntegrator& operator=(const SpectralIntegrator&) = delete;

  const std::vector<double>& grid() const;
  bool integrating_factor_engaged(double dt) const;
  void step(State& state, double dt);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

PropagationReport run_propagation(const CnoidalSolution& sol, const SpectralConfig& cfg);
PropagationReport run_propagation(const SemiTrivialSolution& sol,
                                  const SpectralConfig& cfg);

}  // namespace cnoidal
