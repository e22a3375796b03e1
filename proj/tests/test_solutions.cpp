#include <doctest.h>

#include <cmath>
#include <random>

#include "cnoidal/elliptic.hpp"
#include "cnoidal/solutions.hpp"
#include "cnoidal/verify.hpp"

using namespace cnoidal;

namespace {

const PhysicalParams kFigKdvKdv{1.0, 0.25, 1.0, -1.0, 1.5};
const PhysicalParams kFigBbmBbm{1.0, 1.0, 1.0, -1.0, 2.5};
const PhysicalParams kFigKdvBbm{1.0, 0.25, 1.0, -1.0, 1.5};
const PhysicalParams kFigBbmKdv{1.0, 0.25, 1.0, -1.0, 1.5};

struct FigCase {
  SystemKind kind;
  PhysicalParams phys;
  double sigma;
};

const FigCase kFigures[4] = {
    {SystemKind::kdv_kdv, kFigKdvKdv, 2.0},
    {SystemKind::bbm_bbm, kFigBbmBbm, 1.0},
    {SystemKind::kdv_bbm, kFigKdvBbm, 1.5},
    {SystemKind::bbm_kdv, kFigBbmKdv, 0.5},
};

}  // namespace

TEST_CASE("big_r values and range") {
  CHECK(big_r(1.0, RSign::plus) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(big_r(0.0, RSign::minus) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(big_r(0.5, RSign::plus) == doctest::Approx(std::sqrt(13.0) / 4).epsilon(1e-15));
  for (double m = 0; m <= 1.0; m += 0.05) {
    const double r = big_r(m, RSign::plus);
    CHECK(r >= std::sqrt(3.0) / 2 - 1e-12);
    CHECK(r <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(big_r(1.5, RSign::plus), DomainError);
}

TEST_CASE("validity windows") {
  CHECK(validity(SystemKind::kdv_kdv, kFigKdvKdv, 2.0).sigma_valid);
  // boundary sigma = 2c/a1 = 3 excluded
  CHECK_FALSE(validity(SystemKind::bbm_kdv, kFigBbmKdv, 3.0).sigma_valid);
  // boundary sigma = a0/(2c) = 1/3 excluded
  CHECK_FALSE(validity(SystemKind::kdv_bbm, kFigKdvBbm, 1.0 / 3).sigma_valid);
  CHECK(validity(SystemKind::kdv_bbm, kFigKdvBbm, 1.5).sigma_valid);
  // 2c > a required for the KdV-KdV family
  PhysicalParams narrow = kFigKdvKdv;
  narrow.c = 0.4;
  auto rep = validity(SystemKind::kdv_kdv, narrow, 1.0);
  CHECK_FALSE(rep.sigma_valid);
  CHECK(rep.violated == "2c > a0 > 0");
}

TEST_CASE("figure-set constants (exact-arithmetic reference values)") {
  const auto sol = cnoidal_params(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, 0.5, RSign::plus);
  CHECK(sol.wave.B == doctest::Approx(5.0 / 8).epsilon(1e-15));
  CHECK(sol.wave.omega == doctest::Approx(-21.0 / 64).epsilon(1e-15));
  const double lam2 = 5.0 / (32.0 * std::sqrt(13.0));
  CHECK(sol.wave.lambda * sol.wave.lambda == doctest::Approx(lam2).epsilon(1e-13));
  const double d2 = 15.0 * std::sqrt(2.0) / (64.0 * std::sqrt(13.0));
  CHECK(sol.prof.d2 == doctest::Approx(d2).epsilon(1e-13));
  CHECK(sol.prof.h2 == doctest::Approx(d2 / std::sqrt(2.0)).epsilon(1e-13));
  // derived by the same exact substitution: d0 = 5 sqrt(26)/416 + 5 sqrt(2)/64,
  // h0 = 5 sqrt(13)/416 + 27/32
  CHECK(sol.prof.d0 ==
        doctest::Approx(5 * std::sqrt(26.0) / 416 + 5 * std::sqrt(2.0) / 64).epsilon(1e-13));
  CHECK(sol.prof.h0 ==
        doctest::Approx(5 * std::sqrt(13.0) / 416 + 27.0 / 32).epsilon(1e-13));
  CHECK(sol.R == doctest::Approx(std::sqrt(13.0) / 4).epsilon(1e-15));
  CHECK(sol.prof.d1 == 0.0);
  CHECK(sol.prof.h1 == 0.0);
}

TEST_CASE("all four figure sets annihilate their coefficient tables") {
  for (const auto& fc : kFigures) {
    const auto sol = cnoidal_params(fc.kind, fc.phys, fc.sigma, 0.5, RSign::plus);
    const auto set = coefficient_set(fc.kind, fc.phys, sol.prof, sol.wave);
    CHECK(set.max_scaled() <= 1e-10);
    CHECK(verify_ratio(sol).passed);
  }
}

TEST_CASE("d0 vanishes on the m = R = 1 branch where the prefactor does") {
  for (auto kind : {SystemKind::kdv_kdv, SystemKind::kdv_bbm, SystemKind::bbm_kdv}) {
    const auto& fc = kFigures[kind == SystemKind::kdv_kdv   ? 0
                              : kind == SystemKind::kdv_bbm ? 2
                                                            : 3];
    const auto sol = cnoidal_params(kind, fc.phys, fc.sigma, 1.0, RSign::plus);
    CHECK(sol.prof.d0 == doctest::Approx(0.0).epsilon(1e-14));
  }
  // BBM-BBM has the sign-flipped prefactor: d0 = 0 on the m = -R = 1 branch
  // (feasible only where the common factor is negative, e.g. sigma = 0.2)
  const auto lim = solitary_limit(SystemKind::bbm_bbm, kFigBbmBbm, 0.2,
                                  SolitaryBranch::m_neg_r_one);
  CHECK(lim.d0 == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("solitary limit: m = R = 1 branch of the KdV-KdV figure set") {
  const auto lim =
      solitary_limit(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, SolitaryBranch::m_r_one);
  CHECK(lim.d0 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(lim.lambda * lim.lambda == doctest::Approx(5.0 / 128).epsilon(1e-13));
  const double ratio = std::sqrt(1.0 / (2 * 1.5 - 1.0));
  CHECK(lim.h2 / lim.d2 == doctest::Approx(ratio).epsilon(1e-13));
  // the m = -R = 1 branch has lambda^2 = -5/128 < 0 here
  CHECK_THROWS_AS(
      solitary_limit(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, SolitaryBranch::m_neg_r_one),
      DomainError);
}

TEST_CASE("m = 1 cnoidal construction routes through the solitary limit") {
  const auto sol = cnoidal_params(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, 1.0, RSign::plus);
  const auto lim =
      solitary_limit(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, SolitaryBranch::m_r_one);
  CHECK(sol.wave.m == 1.0);
  CHECK(sol.R == 1.0);
  CHECK(sol.prof.d2 == lim.d2);
  CHECK(sol.prof.h0 == lim.h0);
  CHECK(sol.wave.lambda == lim.lambda);
}

TEST_CASE("near-degenerate denominators raise NumericalError") {
  PhysicalParams p = kFigKdvKdv;
  p.c = p.a * (1.0 + 1e-15);
  CHECK_THROWS_AS(cnoidal_params(SystemKind::kdv_kdv, p, 2.0, 0.5, RSign::plus),
                  NumericalError);
}

TEST_CASE("infeasible branch raises DomainError naming the branch") {
  // KdV-KdV figure set: only R > 0 gives lambda^2 > 0
  const auto rep = validity(SystemKind::kdv_kdv, kFigKdvKdv, 2.0);
  CHECK(rep.lambda2_positive_plus);
  CHECK_FALSE(rep.lambda2_positive_minus);
  try {
    cnoidal_params(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, 0.5, RSign::minus);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("R < 0") != std::string::npos);
  }
}

TEST_CASE("m = 0 degeneracy: constant profiles still solve the ODEs") {
  const auto sol = cnoidal_params(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, 0.0, RSign::plus);
  CHECK(sol.prof.d2 == 0.0);
  CHECK(sol.prof.h2 == 0.0);
  for (double xi : {0.0, 0.7, 2.3}) {
    const auto r = ode_residuals(sol.kind, sol.phys, sol.prof, sol.wave, xi);
    for (int row = 0; row < 3; ++row) {
      const double scaled = r.scale[row] > 0 ? std::abs(r.value[row]) / r.scale[row] : 0;
      CHECK(scaled <= 1e-12);
    }
  }
}

TEST_CASE("omega is m-free and B is sigma-free for the KdV-dispersed systems") {
  for (auto kind : {SystemKind::kdv_kdv, SystemKind::kdv_bbm}) {
    const auto& fc = kFigures[kind == SystemKind::kdv_kdv ? 0 : 2];
    const auto s1 = cnoidal_params(kind, fc.phys, fc.sigma, 0.3, RSign::plus);
    const auto s2 = cnoidal_params(kind, fc.phys, fc.sigma, 0.8, RSign::plus);
    CHECK(s1.wave.omega == s2.wave.omega);  // m-free, bitwise
    CHECK(s1.wave.B == s2.wave.B);
    // quoted closed forms
    const auto& p = fc.phys;
    CHECK(s1.wave.B == doctest::Approx((p.a * p.mu1 - p.b) / (2 * p.a)).epsilon(1e-15));
    CHECK(s1.wave.omega ==
          doctest::Approx(-(p.a * p.mu1 * p.mu1 - p.mu1 * p.b - p.mu0 + fc.sigma) * p.mu1)
              .epsilon(1e-15));
    const auto s3 = cnoidal_params(kind, fc.phys, fc.sigma * 1.1, 0.3, RSign::plus);
    CHECK(s3.wave.B == s1.wave.B);  // B is sigma-free here
  }
  // BBM systems: B depends on sigma per the quoted formula
  const auto b1 = cnoidal_params(SystemKind::bbm_bbm, kFigBbmBbm, 1.0, 0.5, RSign::plus);
  const auto b2 = cnoidal_params(SystemKind::bbm_bbm, kFigBbmBbm, 1.3, 0.5, RSign::plus);
  CHECK(b1.wave.B != b2.wave.B);
  const auto& p = kFigBbmBbm;
  CHECK(b1.wave.B ==
        doctest::Approx((p.a * p.mu0 * p.mu1 - p.b) / (2 * p.a * 1.0 * (p.a * p.mu1 * p.mu1 + 1)))
            .epsilon(1e-15));
}

TEST_CASE("synchronized condition: KdV-KdV closed-form root kills the offset") {
  const auto rep = synchronized_condition(SystemKind::kdv_kdv, kFigKdvKdv, 2.0);
  REQUIRE(rep.exact_sigma.has_value());
  const double sig_star = *rep.exact_sigma;
  const auto at_root = synchronized_condition(SystemKind::kdv_kdv, kFigKdvKdv, sig_star);
  CHECK(std::abs(at_root.residual) <= 1e-12);
  // the m = R = 1 offset itself vanishes there (when the branch is feasible)
  const auto lim =
      solitary_limit(SystemKind::kdv_kdv, kFigKdvKdv, sig_star, SolitaryBranch::m_r_one);
  CHECK(std::abs(lim.h0) <= 1e-12);
}

TEST_CASE("synchronized condition: BBM-BBM quadratic residual is reported, not zero") {
  const auto& p = kFigBbmBbm;
  const double sigma = 0.2;  // m = -R = 1 branch feasible here
  const double B = (p.a * p.mu0 * p.mu1 - p.b) / (2 * p.a * sigma * (p.a * p.mu1 * p.mu1 + 1));
  const auto rep = synchronized_condition(SystemKind::bbm_bbm, p, B);
  CHECK(rep.constrained == 'B');
  CHECK(std::isfinite(rep.residual));
  CHECK(rep.residual != 0.0);  // generic parameters do not synchronize
  CHECK_FALSE(rep.exact_sigma.has_value());
}

TEST_CASE("synchronized condition: BBM-KdV cubic constant term at B = 0") {
  const auto& p = kFigBbmKdv;
  const auto rep = synchronized_condition(SystemKind::bbm_kdv, p, 0.0);
  const double expect =
      2 * p.a * p.b * p.mu0 * p.mu1 - p.a * p.a * p.mu0 * p.mu0 * p.mu1 * p.mu1 - p.b * p.b;
  CHECK(rep.residual == doctest::Approx(expect).epsilon(1e-15));
  CHECK(rep.constrained == 'B');
}

// the per-system synchronization forms are exact cofactors of the solitary
// constant offset: checking the proportionality over random draws pins every
// coefficient of the quadratic/cubic against the (independently transcribed)
// h0 tables
TEST_CASE("synchronized condition residuals are cofactors of the solitary offset") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  std::uniform_real_distribution<double> ub(-2.0, 2.0);

  int done_kdv_kdv = 0, done_bbm_bbm = 0, done_kdv_bbm = 0, done_bbm_kdv = 0;
  for (int i = 0; i < 4000 && (done_kdv_kdv < 10 || done_bbm_bbm < 10 ||
                               done_kdv_bbm < 10 || done_bbm_kdv < 10);
       ++i) {
    const PhysicalParams p{u(rng), u(rng), u(rng), ub(rng), u(rng)};
    const double sigma = u(rng);
    const double denomB = p.a * p.mu0 * p.mu1 - p.b;
    if (std::abs(denomB) < 0.1) continue;

    // KdV-KdV: residual(sigma) = sigma - sigma*
    if (done_kdv_kdv < 10 && std::abs(p.a - p.c) > 0.2) {
      const auto rep = synchronized_condition(SystemKind::kdv_kdv, p, sigma);
      const double expect = sigma - *rep.exact_sigma;
      if (rep.residual == doctest::Approx(expect).epsilon(1e-10).scale(1.0 + std::abs(expect))) {
        ++done_kdv_kdv;
      }
      CHECK(rep.residual == doctest::Approx(expect).epsilon(1e-10).scale(1.0 + std::abs(expect)));
    }

    // BBM-BBM: m = -R = 1 offset = quadratic(B(sigma)) * sigma / ((a - c)(a mu0 mu1 - b))
    if (done_bbm_bbm < 10 && 2 * p.c > p.a && std::abs(p.a - p.c) > 0.2 &&
        validity(SystemKind::bbm_bbm, p, sigma).lambda2_positive_minus) {
      const auto lim = solitary_limit(SystemKind::bbm_bbm, p, sigma,
                                      SolitaryBranch::m_neg_r_one);
      const double B = (p.a * p.mu0 * p.mu1 - p.b) /
                       (2 * p.a * sigma * (p.a * p.mu1 * p.mu1 + 1));
      const double quad = synchronized_condition(SystemKind::bbm_bbm, p, B).residual;
      const double expect = quad * sigma / ((p.a - p.c) * denomB);
      CHECK(lim.h0 == doctest::Approx(expect).epsilon(1e-9).scale(1.0 + std::abs(expect)));
      ++done_bbm_bbm;
    }

    // KdV-BBM: m = R = 1 offset = condition * (-a c sigma / (a - c sigma))
    if (done_kdv_bbm < 10 && sigma > p.a / (2 * p.c) &&
        std::abs(p.a - p.c * sigma) > 0.2 &&
        validity(SystemKind::kdv_bbm, p, sigma).lambda2_positive_plus) {
      const auto lim =
          solitary_limit(SystemKind::kdv_bbm, p, sigma, SolitaryBranch::m_r_one);
      const double cond = synchronized_condition(SystemKind::kdv_bbm, p, sigma).residual;
      const double expect = cond * (-p.a * p.c * sigma / (p.a - p.c * sigma));
      CHECK(lim.h0 == doctest::Approx(expect).epsilon(1e-9).scale(1.0 + std::abs(expect)));
      ++done_kdv_bbm;
    }

    // BBM-KdV: m = R = 1 offset = cubic(B(sigma)) * (-a sigma^2 / ((a sigma - c)(a mu0 mu1 - b)^2))
    if (done_bbm_kdv < 10 && sigma < 2 * p.c / p.a &&
        std::abs(p.a * sigma - p.c) > 0.2 &&
        validity(SystemKind::bbm_kdv, p, sigma).lambda2_positive_plus) {
      const auto lim =
          solitary_limit(SystemKind::bbm_kdv, p, sigma, SolitaryBranch::m_r_one);
      const double B = (p.a * p.mu0 * p.mu1 - p.b) /
                       (2 * p.a * sigma * (p.a * p.mu1 * p.mu1 + 1));
      const double cubic = synchronized_condition(SystemKind::bbm_kdv, p, B).residual;
      const double expect =
          cubic * (-p.a * sigma * sigma / ((p.a * sigma - p.c) * denomB * denomB));
      CHECK(lim.h0 == doctest::Approx(expect).epsilon(1e-9).scale(1.0 + std::abs(expect)));
      ++done_bbm_kdv;
    }
  }
  CHECK(done_kdv_kdv >= 10);
  CHECK(done_bbm_bbm >= 10);
  CHECK(done_kdv_bbm >= 10);
  CHECK(done_bbm_kdv >= 10);
}

TEST_CASE("semi-trivial family 1: constant long wave") {
  const auto sol =
      semi_trivial_family(SystemKind::kdv_kdv, kFigKdvKdv, 1, {{"h0", 3.7}});
  const auto [f, g] = evaluate_profiles(sol, 1.3);
  CHECK(f == 0.0);
  CHECK(g == 3.7);
  const auto r = ode_residuals(sol.kind, sol.phys, sol.prof, sol.wave, 0.9);
  CHECK(r.value[0] == 0.0);
  CHECK(r.value[1] == 0.0);
  CHECK(r.value[2] == 0.0);
}

TEST_CASE("semi-trivial family 2: plane wave over constant") {
  for (auto kind : {SystemKind::kdv_kdv, SystemKind::bbm_bbm}) {
    const auto sol = semi_trivial_family(
        kind, kFigKdvKdv, 2, {{"B", 0.8}, {"d0", 1.1}, {"h0", -0.4}, {"omega", 0.6}});
    CHECK(sol.derived.count("sigma") == 1);
    const auto r = ode_residuals(sol.kind, sol.phys, sol.prof, sol.wave, 0.0);
    for (int row = 0; row < 3; ++row) {
      const double scaled = r.scale[row] > 0 ? std::abs(r.value[row]) / r.scale[row] : 0;
      CHECK(scaled <= 1e-14);
    }
  }
  CHECK_THROWS_AS(semi_trivial_family(SystemKind::kdv_kdv, kFigKdvKdv, 2, {{"B", 0.0}}),
                  ConstraintError);
}

TEST_CASE("semi-trivial family 3 (KdV-KdV): cnoidal long wave") {
  const ParamMap free{{"h2", 1.0}, {"sigma", 2.0}, {"m", 0.5}};
  const auto sol = semi_trivial_family(SystemKind::kdv_kdv, kFigKdvKdv, 3, free);
  CHECK(sol.derived.at("lambda") == doctest::Approx(std::sqrt(1.0 / 4.5)).epsilon(1e-15));
  CHECK(sol.prof.h0 == doctest::Approx(5.0 / 3).epsilon(1e-15));  // -2/3 + 4/3 + 1
  for (double xi : {0.0, 0.5, 1.7}) {
    const auto r = ode_residuals(sol.kind, sol.phys, sol.prof, sol.wave, xi);
    CHECK(r.value[0] == 0.0);
    CHECK(r.value[1] == 0.0);
    const double scaled = r.scale[2] > 0 ? std::abs(r.value[2]) / r.scale[2] : 0;
    CHECK(scaled <= 1e-10);
  }
  CHECK_THROWS_AS(
      semi_trivial_family(SystemKind::kdv_kdv, kFigKdvKdv, 3, {{"m", 0.0}}),
      ConstraintError);
}

TEST_CASE("semi-trivial family 3 (KdV-BBM): cn short wave at sigma = a0/(6c)") {
  const ParamMap free{{"h2", 0.2}, {"m", 0.5}};
  const auto sol = semi_trivial_family(SystemKind::kdv_bbm, kFigKdvBbm, 3, free);
  CHECK(sol.derived.at("sigma") == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK(sol.prof.d1 != 0.0);
  const auto rep = verify_ode(sol, 101);
  CHECK(rep.max_abs <= 1e-9);
  // the gate flips for large h2
  CHECK_THROWS_AS(
      semi_trivial_family(SystemKind::kdv_bbm, kFigKdvBbm, 3, {{"h2", 1.0}, {"m", 0.5}}),
      ConstraintError);
}

TEST_CASE("semi-trivial family 3 (BBM-KdV): cn short wave at sigma = 6c/a1") {
  const PhysicalParams phys{3.0, 0.4, 0.75, 2.5, 6.0};  // mu0, mu1, a, b, c
  const ParamMap free{{"h2", 4.5}, {"m", 5.0 / 6}};
  const auto sol = semi_trivial_family(SystemKind::bbm_kdv, phys, 3, free);
  CHECK(sol.derived.at("sigma") == doctest::Approx(6 * 6.0 / 0.75).epsilon(1e-15));
  CHECK(sol.prof.d1 != 0.0);
  const auto rep = verify_ode(sol, 101);
  CHECK(rep.max_abs <= 1e-9);
  // figure-set physical parameters violate the positivity gate for all h2 > 0
  CHECK_THROWS_AS(
      semi_trivial_family(SystemKind::bbm_kdv, kFigBbmKdv, 3, {{"h2", 0.5}, {"m", 0.5}}),
      ConstraintError);
}

TEST_CASE("semi-trivial family 4 (mixed systems): cnoidal long wave") {
  for (auto kind : {SystemKind::kdv_bbm, SystemKind::bbm_kdv}) {
    const auto& fc = kFigures[kind == SystemKind::kdv_bbm ? 2 : 3];
    const auto sol = semi_trivial_family(kind, fc.phys, 4,
                                         {{"h2", 1.0}, {"sigma", 0.8}, {"m", 0.6}});
    const auto rep = verify_ode(sol, 101);
    CHECK(rep.max_abs <= 1e-10);
  }
}

TEST_CASE("catalog lists every family") {
  CHECK(semi_trivial_family_count(SystemKind::kdv_kdv) == 3);
  CHECK(semi_trivial_family_count(SystemKind::kdv_bbm) == 4);
  const auto list = semi_trivial_catalog(SystemKind::kdv_kdv, kFigKdvKdv, {});
  CHECK(list.size() == 3);
  CHECK(list[0].family == 1);
}

TEST_CASE("field evaluation structure") {
  const auto sol = cnoidal_params(SystemKind::kdv_kdv, kFigKdvKdv, 2.0, 0.5, RSign::plus);

  // xi = 0: cn = 1
  const auto [f0, g0] = evaluate_profiles(sol, 0.0);
  CHECK(f0 == doctest::Approx(sol.prof.d0 + sol.prof.d2).epsilon(1e-15));
  CHECK(g0 == doctest::Approx(sol.prof.h0 + sol.prof.h2).epsilon(1e-15));

  // cn^2 has period 2K
  const double period = fundamental_period(sol);
  const auto [fp, gp] = evaluate_profiles(sol, period);
  CHECK(fp == doctest::Approx(f0).epsilon(1e-12));
  CHECK(gp == doctest::Approx(g0).epsilon(1e-12));

  // t = 0, x = 0: unit phase
  const auto [u00, v00] = evaluate_fields(sol, 0.0, 0.0);
  CHECK(u00.real() == doctest::Approx(f0).epsilon(1e-15));
  CHECK(u00.imag() == 0.0);
  CHECK(v00 == g0);

  // |u| = |f| and pure translation of v
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> ux(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double x = ux(rng), t = ux(rng);
    const auto [u, v] = evaluate_fields(sol, x, t);
    const auto [f, g] = evaluate_profiles(sol, x - sol.wave.sigma * t);
    CHECK(std::abs(u) == doctest::Approx(std::abs(f)).epsilon(1e-15));
    const double dt = 0.37;
    const auto [u2, v2] = evaluate_fields(sol, x + sol.wave.sigma * dt, t + dt);
    CHECK(v2 == doctest::Approx(v).epsilon(1e-12));
    (void)u2;
    (void)g;
  }
}

TEST_CASE("coefficient-vanishing property over randomized valid draws") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> logu(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> ub(-5.0, 5.0);
  std::uniform_real_distribution<double> um(0.05, 0.95);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int built = 0;
  for (int i = 0; built < 60; ++i) {
    REQUIRE(i < 10000);
    const SystemKind kind = static_cast<SystemKind>(i % 4);
    PhysicalParams p{std::exp(logu(rng)), std::exp(logu(rng)), std::exp(logu(rng)),
                     ub(rng), std::exp(logu(rng))};
    double sigma;
    switch (kind) {
      case SystemKind::kdv_kdv:
      case SystemKind::bbm_bbm:
        if (!(2 * p.c > p.a)) continue;
        if (std::abs(p.a - p.c) < 0.05 * std::max(p.a, p.c)) continue;
        sigma = 0.1 + 9.9 * unit(rng);
        break;
      case SystemKind::kdv_bbm:
        sigma = p.a / (2 * p.c) * (1.05 + 4 * unit(rng));
        if (std::abs(p.a - p.c * sigma) < 0.05 * std::max(p.a, p.c * sigma)) continue;
        break;
      default:
        sigma = 2 * p.c / p.a * (0.05 + 0.9 * unit(rng));
        if (std::abs(p.a * sigma - p.c) < 0.05 * std::max(p.a * sigma, p.c)) continue;
        break;
    }
    const double m = um(rng);
    const auto rep = validity(kind, p, sigma);
    for (RSign sign : {RSign::plus, RSign::minus}) {
      if (!rep.feasible(sign)) continue;
      const auto sol = cnoidal_params(kind, p, sigma, m, sign);
      const auto set = coefficient_set(kind, p, sol.prof, sol.wave);
      CHECK(set.max_scaled() <= 1e-9);
      ++built;
    }
  }
}
