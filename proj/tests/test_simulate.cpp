#include <doctest.h>

#include <cmath>
#include <complex>
#include <future>

#include "cnoidal/simulate.hpp"
#include "cnoidal/verify.hpp"

using namespace cnoidal;

namespace {
const PhysicalParams kFig{1.0, 0.25, 1.0, -1.0, 1.5};

SemiTrivialSolution cnoidal_v(double h2 = 1.0, double sigma = 2.0, double m = 0.5) {
  return semi_trivial_family(SystemKind::kdv_kdv, kFig, 3,
                             {{"h2", h2}, {"sigma", sigma}, {"m", m}});
}
}  // namespace

TEST_CASE("conservation_probe") {
  std::vector<std::vector<double>> states = {{1, 1, 1, 1}, {1, 1, 1, 1}};
  CHECK(conservation_probe(states, 2.0) == 0.0);
  states.push_back({1, 1, 1, 2});
  CHECK(conservation_probe(states, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(conservation_probe({{1.0}}, 1.0), DomainError);
}

TEST_CASE("config validation") {
  const auto sol = cnoidal_v();
  SpectralConfig cfg;
  cfg.n_modes = 100;  // not a power of two
  CHECK_THROWS_AS(run_propagation(sol, cfg), ConfigError);
  cfg.n_modes = 8;
  CHECK_THROWS_AS(run_propagation(sol, cfg), ConfigError);
  cfg.n_modes = 64;
  cfg.dt = 0.0;
  CHECK_THROWS_AS(run_propagation(sol, cfg), ConfigError);
}

TEST_CASE("constant state is a fixed point") {
  const auto sol = semi_trivial_family(SystemKind::kdv_kdv, kFig, 1, {{"h0", 1.3}});
  SpectralConfig cfg;
  cfg.n_modes = 32;
  cfg.dt = 1e-2;
  cfg.t_end = 2.0;
  cfg.domain_length = 5.0;
  const auto rep = run_propagation(sol, cfg);
  CHECK(rep.linf_error_u <= 1e-13);
  CHECK(rep.linf_error_v <= 1e-13);
  CHECK(rep.conserved_drift <= 1e-13);
  CHECK(rep.errors_over_time.front()[0] == 0.0);
  CHECK(rep.errors_over_time.front()[1] == 0.0);
}

TEST_CASE("cnoidal long wave propagates with small error") {
  const auto sol = cnoidal_v();
  SpectralConfig cfg;
  cfg.n_modes = 128;
  cfg.dt = 2e-4;
  cfg.t_end = 0.5;
  const auto rep = run_propagation(sol, cfg);
  CHECK(rep.linf_error_u == 0.0);  // u stays identically zero
  CHECK(rep.linf_error_v <= 1e-6);
  CHECK(rep.conserved_drift <= 1e-11);
}

TEST_CASE("full figure solution propagates and conserves the v mean") {
  const auto sol = cnoidal_params(SystemKind::kdv_kdv, kFig, 2.0, 0.5, RSign::plus);
  SpectralConfig cfg;
  cfg.n_modes = 128;
  cfg.dt = 1e-3;
  cfg.t_end = 0.5;
  const auto rep = run_propagation(sol, cfg);
  CHECK(rep.linf_error_u <= 1e-5);
  CHECK(rep.linf_error_v <= 1e-5);
  CHECK(rep.conserved_drift <= 1e-11);
}

TEST_CASE("BBM-type systems propagate") {
  const PhysicalParams phys{1.0, 1.0, 1.0, -1.0, 2.5};
  const auto sol = cnoidal_params(SystemKind::bbm_bbm, phys, 1.0, 0.5, RSign::plus);
  SpectralConfig cfg;
  cfg.n_modes = 128;
  cfg.dt = 1e-3;
  cfg.t_end = 0.5;
  const auto rep = run_propagation(sol, cfg);
  CHECK(rep.linf_error_u <= 1e-6);
  CHECK(rep.linf_error_v <= 1e-6);
  CHECK(rep.conserved_drift <= 1e-12);
}

TEST_CASE("RK4 time convergence (4th order in dt)") {
  // dt pair chosen so the time error sits well above the 1e-14 round-off
  // accumulation floor
  const auto sol = cnoidal_params(SystemKind::kdv_kdv, kFig, 2.0, 0.5, RSign::plus);
  SpectralConfig cfg;
  cfg.n_modes = 64;
  cfg.t_end = 1.0;
  cfg.dt = 1.6e-2;
  const double e1 = run_propagation(sol, cfg).linf_error_v;
  cfg.dt = 8e-3;
  const double e2 = run_propagation(sol, cfg).linf_error_v;
  const double slope = std::log2(e1 / e2);
  CHECK(slope > 3.5);
  CHECK(slope < 4.6);
}

TEST_CASE("spectral accuracy in n_modes on a multi-period domain") {
  const auto sol = cnoidal_v(1.0, 2.0, 0.9);
  SpectralConfig cfg;
  cfg.domain_length = 8 * fundamental_period(sol);
  cfg.dt = 5e-5;
  cfg.t_end = 0.05;
  cfg.n_modes = 128;
  const double coarse = run_propagation(sol, cfg).linf_error_v;
  cfg.n_modes = 256;
  const double fine = run_propagation(sol, cfg).linf_error_v;
  CHECK(fine < 1e-2 * coarse);
}

TEST_CASE("well-resolved run stays accurate without dealiasing") {
  const auto sol = cnoidal_v();
  SpectralConfig cfg;
  cfg.n_modes = 128;
  cfg.dt = 2e-4;
  cfg.t_end = 0.5;
  cfg.dealias = false;
  const auto rep = run_propagation(sol, cfg);
  CHECK(rep.linf_error_v <= 1e-6);
  CHECK(rep.conserved_drift <= 1e-11);
}

TEST_CASE("gauge transform equals direct evolution when B L is a multiple of 2 pi") {
  // use the figure profiles as smooth periodic initial data; the comparison
  // is between two discretizations of the same flow
  const auto sol = cnoidal_params(SystemKind::kdv_kdv, kFig, 2.0, 0.5, RSign::plus);
  const double L = fundamental_period(sol);
  const double B = 2.0 * (2.0 * 3.14159265358979323846 / L);

  SpectralConfig cfg;
  cfg.n_modes = 128;
  cfg.domain_length = L;
  cfg.dt = 5e-4;
  cfg.t_end = 0.1;

  SpectralIntegrator gauge(SystemKind::kdv_kdv, kFig, B, cfg);
  SpectralIntegrator direct(SystemKind::kdv_kdv, kFig, 0.0, cfg);

  const auto& x = gauge.grid();
  SpectralIntegrator::State sg, sd;
  const std::complex<double> i_unit(0, 1);
  for (double xi : x) {
    const auto [f, g] = evaluate_profiles(sol, xi);
    sg.w.push_back(f);
    sg.v.push_back(g);
    sd.w.push_back(std::exp(i_unit * B * xi) * f);
    sd.v.push_back(g);
  }
  const int steps = int(cfg.t_end / cfg.dt + 0.5);
  for (int s = 0; s < steps; ++s) {
    gauge.step(sg, cfg.dt);
    direct.step(sd, cfg.dt);
  }
  double err = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    err = std::max(err, std::abs(sd.w[j] - std::exp(i_unit * B * x[j]) * sg.w[j]));
    err = std::max(err, std::abs(sd.v[j] - sg.v[j]));
  }
  CHECK(err <= 1e-10);
}

TEST_CASE("independent runs in parallel match the serial results") {
  const auto sol = cnoidal_v();
  SpectralConfig cfg;
  cfg.n_modes = 64;
  cfg.dt = 1e-3;
  cfg.t_end = 0.2;
  const auto serial_a = run_propagation(sol, cfg);
  SpectralConfig cfg_b = cfg;
  cfg_b.n_modes = 128;
  const auto serial_b = run_propagation(sol, cfg_b);

  auto fa = std::async(std::launch::async, [&] { return run_propagation(sol, cfg); });
  auto fb = std::async(std::launch::async, [&] { return run_propagation(sol, cfg_b); });
  const auto par_a = fa.get();
  const auto par_b = fb.get();
  CHECK(par_a.linf_error_v == serial_a.linf_error_v);  // bit-identical
  CHECK(par_b.linf_error_v == serial_b.linf_error_v);
}

TEST_CASE("blow-up raises StabilityError") {
  const auto sol = cnoidal_v(8.0, 2.0, 0.5);  // steep wave
  SpectralConfig cfg;
  cfg.n_modes = 256;
  cfg.dt = 0.25;  // wildly violates the advective stability limit
  cfg.t_end = 25.0;
  CHECK_THROWS_AS(run_propagation(sol, cfg), StabilityError);
}

TEST_CASE("integrating factor engages on stiff steps only") {
  const auto sol = cnoidal_v();
  SpectralConfig cfg;
  cfg.n_modes = 256;
  cfg.domain_length = fundamental_period(sol);
  SpectralIntegrator integ(SystemKind::kdv_kdv, kFig, 0.0, cfg);
  CHECK(integ.integrating_factor_engaged(1e-4));
  CHECK_FALSE(integ.integrating_factor_engaged(1e-9));
}
