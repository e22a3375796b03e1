// Closed-form cnoidal parameter families for the four systems, their
// solitary (m -> 1) limits, and field evaluation.

#include "cnoidal/solutions.hpp"

#include <cmath>

#include "cnoidal/elliptic.hpp"

namespace cnoidal {

namespace {

void require_m_range(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError("modulus m must lie in [0, 1]");
  }
}

void guard_denominator(double num, double ref, const std::string& what) {
  if (std::abs(num) <= 1e-14 * std::max(1.0, std::abs(ref))) {
    throw NumericalError("denominator " + what + " within 1e-14 of zero");
  }
}

struct FamilyCoeffs {
  double B, omega, d0, d2, h0, h2, lambda2;
};

// KdV-type common factor 3a^2 mu1^2 - 2ab mu1 - 4a mu0 - b^2 + 4a.
double kdv_common(const PhysicalParams& p) {
  return 3 * p.a * p.a * p.mu1 * p.mu1 - 2 * p.a * p.b * p.mu1 - 4 * p.a * p.mu0 -
         p.b * p.b + 4 * p.a;
}

// BBM-type common factor (sigma-dependent).
double bbm_common(const PhysicalParams& p, double sig) {
  const double a = p.a, b = p.b, mu0 = p.mu0, mu1 = p.mu1;
  return 4 * a * a * a * mu1 * mu1 * mu1 * mu1 * sig -
         4 * a * a * b * mu1 * mu1 * mu1 * sig - a * a * mu0 * mu0 * mu1 * mu1 -
         4 * a * a * mu0 * mu1 * mu1 * sig + 8 * a * a * mu1 * mu1 * sig +
         2 * a * b * mu0 * mu1 - 4 * a * b * mu1 * sig - 4 * a * mu0 * sig +
         4 * a * sig - b * b;
}

FamilyCoeffs family_kdv_kdv(const PhysicalParams& p, double sig, double m, double R) {
  const double a = p.a, b = p.b, c = p.c, mu0 = p.mu0, mu1 = p.mu1;
  const double m2 = m * m;
  guard_denominator(a - c, std::max(a, c), "a - c");
  const double P = kdv_common(p);
  FamilyCoeffs f{};
  f.B = (a * mu1 - b) / (2 * a);
  f.omega = -(a * mu1 * mu1 - mu1 * b - mu0 + sig) * mu1;
  const double pre = m2 * m2 - 2 * m2 * R - m2 + R + 1;
  f.d0 = pre * std::sqrt(2 * c - a) * P / (8 * std::sqrt(a) * R * R * (a - c));
  f.d2 = 3 * std::sqrt(2 * c - a) * P * m2 / (8 * std::sqrt(a) * R * (a - c));
  f.h0 = -1.0 / (8 * a * R * (a - c)) *
         (6 * a * a * a * m2 * mu1 * mu1 - 3 * a * a * a * mu1 * mu1 * R +
          6 * a * a * c * mu1 * mu1 * R - 3 * a * a * a * mu1 * mu1 -
          4 * a * a * b * m2 * mu1 + 2 * a * a * b * mu1 * R - 4 * a * b * c * mu1 * R +
          2 * a * a * b * mu1 - 8 * a * a * m2 * mu0 + 4 * a * a * mu0 * R -
          8 * a * a * R * sig - 2 * a * b * b * m2 + a * b * b * R -
          8 * a * c * mu0 * R + 8 * a * c * R * sig - 2 * b * b * c * R +
          8 * a * a * m2 + 4 * a * a * mu0 + 4 * a * a * R + a * b * b - 4 * a * a);
  f.h2 = 3 * P * m2 / (8 * R * (a - c));
  f.lambda2 = P / (16 * a * R * (a - c));
  return f;
}

FamilyCoeffs family_bbm_bbm(const PhysicalParams& p, double sig, double m, double R) {
  const double a = p.a, b = p.b, c = p.c, mu0 = p.mu0, mu1 = p.mu1;
  const double m2 = m * m;
  guard_denominator(a - c, std::max(a, c), "a - c");
  const double Q = bbm_common(p, sig);
  const double E = (a * mu1 * mu1 + 1) * (a * mu1 * mu1 + 1);
  FamilyCoeffs f{};
  f.B = (a * mu0 * mu1 - b) / (2 * a * sig * (a * mu1 * mu1 + 1));
  f.omega = -(a * mu1 * mu1 * sig - b * mu1 - mu0 + sig) * mu1 / (a * mu1 * mu1 + 1);
  const double pre = m2 * m2 + 2 * m2 * R - m2 - R + 1;
  f.d0 = std::sqrt(a * (2 * c - a)) * pre * Q / (8 * a * R * R * sig * E * (a - c));
  f.d2 = -3 * m2 * std::sqrt(a * (2 * c - a)) * Q / (8 * a * R * sig * E * (a - c));
  // the printed "8 a^4 mu1^4 r sigma^2" term is transcribed with r = R
  f.h0 =
      1.0 / (8 * a * R * sig * E * (a - c)) *
      (8 * a * a * a * a * mu1 * mu1 * mu1 * mu1 * R * sig * sig -
       8 * a * a * a * c * mu1 * mu1 * mu1 * mu1 * R * sig * sig +
       8 * a * a * a * a * m2 * mu1 * mu1 * mu1 * mu1 * sig -
       4 * a * a * a * a * mu1 * mu1 * mu1 * mu1 * R * sig -
       4 * a * a * a * a * mu1 * mu1 * mu1 * mu1 * sig -
       8 * a * a * a * b * m2 * mu1 * mu1 * mu1 * sig -
       4 * a * a * a * b * mu1 * mu1 * mu1 * R * sig +
       8 * a * a * b * c * mu1 * mu1 * mu1 * R * sig +
       4 * a * a * a * b * mu1 * mu1 * mu1 * sig -
       2 * a * a * a * m2 * mu0 * mu0 * mu1 * mu1 -
       8 * a * a * a * m2 * mu0 * mu1 * mu1 * sig -
       a * a * a * mu0 * mu0 * mu1 * mu1 * R -
       4 * a * a * a * mu0 * mu1 * mu1 * R * sig +
       16 * a * a * a * mu1 * mu1 * R * sig * sig +
       2 * a * a * c * mu0 * mu0 * mu1 * mu1 * R +
       8 * a * a * c * mu0 * mu1 * mu1 * R * sig -
       16 * a * a * c * mu1 * mu1 * R * sig * sig +
       16 * a * a * a * m2 * mu1 * mu1 * sig + a * a * a * mu0 * mu0 * mu1 * mu1 +
       4 * a * a * a * mu0 * mu1 * mu1 * sig - 8 * a * a * a * mu1 * mu1 * R * sig -
       8 * a * a * a * mu1 * mu1 * sig + 4 * a * a * b * m2 * mu0 * mu1 -
       8 * a * a * b * m2 * mu1 * sig + 2 * a * a * b * mu0 * mu1 * R -
       4 * a * a * b * mu1 * R * sig - 4 * a * b * c * mu0 * mu1 * R +
       8 * a * b * c * mu1 * R * sig - 2 * a * a * b * mu0 * mu1 +
       4 * a * a * b * mu1 * sig - 8 * a * a * m2 * mu0 * sig -
       4 * a * a * mu0 * R * sig + 8 * a * a * R * sig * sig +
       8 * a * c * mu0 * R * sig - 8 * a * c * R * sig * sig + 8 * a * a * m2 * sig +
       4 * a * a * mu0 * sig - 4 * a * a * R * sig - 2 * a * b * b * m2 -
       a * b * b * R + 2 * b * b * c * R - 4 * a * a * sig + a * b * b);
  f.h2 = -3 * Q * m2 / (8 * R * sig * E * (a - c));
  f.lambda2 = Q / (-16 * a * R * sig * sig * (a - c) * E);
  return f;
}

FamilyCoeffs family_kdv_bbm(const PhysicalParams& p, double sig, double m, double R) {
  const double a = p.a, b = p.b, c = p.c, mu0 = p.mu0, mu1 = p.mu1;
  const double m2 = m * m;
  guard_denominator(a - c * sig, std::max(a, c * sig), "a - c*sigma");
  const double P = kdv_common(p);
  FamilyCoeffs f{};
  f.B = (a * mu1 - b) / (2 * a);
  f.omega = -(a * mu1 * mu1 - mu1 * b - mu0 + sig) * mu1;
  const double pre = m2 * m2 - 2 * m2 * R - m2 + R + 1;
  f.d0 = pre * std::sqrt(2 * c * sig - a) * P /
         (8 * std::sqrt(a) * R * R * (a - c * sig));
  f.d2 = 3 * std::sqrt(2 * c * sig - a) * P * m2 /
         (8 * std::sqrt(a) * R * (a - c * sig));
  f.h0 = 1.0 / (8 * a * R * (c * sig - a)) *
         (6 * a * a * c * mu1 * mu1 * R * sig + 6 * a * a * a * m2 * mu1 * mu1 -
          3 * a * a * a * mu1 * mu1 * R - 4 * a * b * c * mu1 * R * sig -
          3 * a * a * a * mu1 * mu1 - 4 * a * a * b * m2 * mu1 +
          2 * a * a * b * mu1 * R - 8 * a * c * mu0 * R * sig +
          8 * a * c * R * sig * sig - 2 * b * b * c * R * sig + 2 * a * a * b * mu1 -
          8 * a * a * m2 * mu0 + 4 * a * a * mu0 * R - 8 * a * a * R * sig -
          2 * a * b * b * m2 + a * b * b * R + 8 * a * a * m2 + 4 * a * a * mu0 +
          4 * a * a * R + a * b * b - 4 * a * a);
  f.h2 = 3 * P * m2 / (8 * R * (a - c * sig));
  f.lambda2 = P / (16 * a * R * (a - c * sig));
  return f;
}

FamilyCoeffs family_bbm_kdv(const PhysicalParams& p, double sig, double m, double R) {
  const double a = p.a, b = p.b, c = p.c, mu0 = p.mu0, mu1 = p.mu1;
  const double m2 = m * m;
  guard_denominator(a * sig - c, std::max(a * sig, c), "a*sigma - c");
  const double Q = bbm_common(p, sig);
  const double E = (a * mu1 * mu1 + 1) * (a * mu1 * mu1 + 1);
  FamilyCoeffs f{};
  f.B = (a * mu0 * mu1 - b) / (2 * a * sig * (a * mu1 * mu1 + 1));
  f.omega = -(a * mu1 * mu1 * sig - b * mu1 - mu0 + sig) * mu1 / (a * mu1 * mu1 + 1);
  const double pre = m2 * m2 - 2 * m2 * R - m2 + R + 1;
  f.d0 = std::sqrt(2 * c - a * sig) * pre * Q /
         (8 * R * R * std::sqrt(a * sig) * E * (a * sig - c));
  f.d2 = 3 * m2 * std::sqrt(2 * c - a * sig) * Q /
         (8 * R * std::sqrt(a * sig) * E * (a * sig - c));
  f.h0 =
      -1.0 / (8 * a * R * sig * E * (a * sig - c)) *
      (-8 * a * a * a * a * mu1 * mu1 * mu1 * mu1 * R * sig * sig * sig +
       8 * a * a * a * a * m2 * mu1 * mu1 * mu1 * mu1 * sig * sig +
       4 * a * a * a * a * mu1 * mu1 * mu1 * mu1 * R * sig * sig +
       8 * a * a * a * c * mu1 * mu1 * mu1 * mu1 * R * sig * sig -
       4 * a * a * a * a * mu1 * mu1 * mu1 * mu1 * sig * sig -
       8 * a * a * a * b * m2 * mu1 * mu1 * mu1 * sig * sig +
       4 * a * a * a * b * mu1 * mu1 * mu1 * R * sig * sig +
       4 * a * a * a * b * mu1 * mu1 * mu1 * sig * sig -
       2 * a * a * a * m2 * mu0 * mu0 * mu1 * mu1 * sig -
       8 * a * a * a * m2 * mu0 * mu1 * mu1 * sig * sig +
       a * a * a * mu0 * mu0 * mu1 * mu1 * sig * R +
       4 * a * a * a * mu0 * mu1 * mu1 * R * sig * sig -
       16 * a * a * a * mu1 * mu1 * R * sig * sig * sig -
       8 * a * a * b * c * mu1 * mu1 * mu1 * R * sig +
       16 * a * a * a * m2 * mu1 * mu1 * sig * sig +
       a * a * a * mu0 * mu0 * mu1 * mu1 * sig +
       4 * a * a * a * mu0 * mu1 * mu1 * sig * sig +
       8 * a * a * a * mu1 * mu1 * R * sig * sig -
       2 * a * a * c * mu0 * mu0 * mu1 * mu1 * R -
       8 * a * a * c * mu0 * mu1 * mu1 * R * sig +
       16 * a * a * c * mu1 * mu1 * R * sig * sig -
       8 * a * a * a * mu1 * mu1 * sig * sig + 4 * a * a * b * m2 * mu0 * mu1 * sig -
       8 * a * a * b * m2 * mu1 * sig * sig - 2 * a * a * b * mu0 * mu1 * R * sig +
       4 * a * a * b * mu1 * R * sig * sig - 2 * a * a * b * mu0 * mu1 * sig +
       4 * a * a * b * mu1 * sig * sig - 8 * a * a * m2 * mu0 * sig * sig +
       4 * a * a * mu0 * R * sig * sig - 8 * a * a * R * sig * sig * sig +
       4 * a * b * c * mu0 * mu1 * R - 8 * a * b * c * mu1 * R * sig +
       8 * a * a * m2 * sig * sig + 4 * a * a * mu0 * sig * sig +
       4 * a * a * R * sig * sig - 2 * a * b * b * m2 * sig + a * b * b * R * sig -
       8 * a * c * mu0 * R * sig + 8 * a * c * R * sig * sig - 4 * a * a * sig * sig +
       a * b * b * sig - 2 * b * b * c * R);
  f.h2 = 3 * Q * m2 / (8 * R * E * (a * sig - c));
  f.lambda2 = Q / (16 * a * R * sig * E * (a * sig - c));
  return f;
}

FamilyCoeffs family_coeffs(SystemKind kind, const PhysicalParams& p, double sig,
                           double m, double R) {
  switch (kind) {
    case SystemKind::kdv_kdv: return family_kdv_kdv(p, sig, m, R);
    case SystemKind::bbm_bbm: return family_bbm_bbm(p, sig, m, R);
    case SystemKind::kdv_bbm: return family_kdv_bbm(p, sig, m, R);
    case SystemKind::bbm_kdv: return family_bbm_kdv(p, sig, m, R);
  }
  throw DomainError("unknown SystemKind");
}

const char* branch_name(RSign s) { return s == RSign::plus ? "R > 0" : "R < 0"; }

}  // namespace

double big_r(double m, RSign sign) {
  require_m_range(m);
  const double m2 = m * m;
  const double mag = std::sqrt(m2 * m2 - m2 + 1.0);
  return sign == RSign::plus ? mag : -mag;
}

ValidityReport validity(SystemKind kind, const PhysicalParams& phys, double sigma) {
  phys.validate();
  ValidityReport rep;
  rep.sigma_valid = true;
  switch (kind) {
    case SystemKind::kdv_kdv:
      if (!(2 * phys.c > phys.a)) {
        rep.sigma_valid = false;
        rep.violated = "2c > a0 > 0";
      } else if (!(sigma > 0)) {
        rep.sigma_valid = false;
        rep.violated = "sigma > 0";
      }
      break;
    case SystemKind::bbm_bbm:
      if (!(2 * phys.c > phys.a)) {
        rep.sigma_valid = false;
        rep.violated = "2c > a1 > 0";
      } else if (!(sigma > 0)) {
        rep.sigma_valid = false;
        rep.violated = "sigma > 0";
      }
      break;
    case SystemKind::kdv_bbm:
      if (!(sigma > phys.a / (2 * phys.c))) {
        rep.sigma_valid = false;
        rep.violated = "sigma > a0/(2c)";
      }
      break;
    case SystemKind::bbm_kdv:
      if (!(sigma > 0 && sigma < 2 * phys.c / phys.a)) {
        rep.sigma_valid = false;
        rep.violated = "0 < sigma < 2c/a1";
      }
      break;
  }
  if (rep.sigma_valid) {
    // lambda^2's sign depends on R only through sign(R); probe with R = +-1
    try {
      rep.lambda2_positive_plus =
          family_coeffs(kind, phys, sigma, 0.5, +1.0).lambda2 > 0;
      rep.lambda2_positive_minus =
          family_coeffs(kind, phys, sigma, 0.5, -1.0).lambda2 > 0;
    } catch (const NumericalError&) {
      rep.lambda2_positive_plus = rep.lambda2_positive_minus = false;
    }
  }
  return rep;
}

double quoted_ratio(SystemKind kind, const PhysicalParams& phys, double sigma) {
  switch (kind) {
    case SystemKind::kdv_kdv:
    case SystemKind::bbm_bbm:
      return std::sqrt(phys.a / (2 * phys.c - phys.a));
    case SystemKind::kdv_bbm:
      return std::sqrt(phys.a / (2 * phys.c * sigma - phys.a));
    case SystemKind::bbm_kdv:
      return std::sqrt(phys.a * sigma / (2 * phys.c - phys.a * sigma));
  }
  throw DomainError("unknown SystemKind");
}

CnoidalSolution cnoidal_params(SystemKind kind, const PhysicalParams& phys,
                               double sigma, double m, RSign sign) {
  require_m_range(m);
  const ValidityReport rep = validity(kind, phys, sigma);
  if (!rep.sigma_valid) {
    throw DomainError("cnoidal_params: validity violated: " + rep.violated);
  }

  if (m == 1.0) {
    // route through the solitary limit; the R ambiguity at m = 1 is resolved
    // by the explicit branch choice
    const auto sol = solitary_limit(
        kind, phys, sigma,
        sign == RSign::plus ? SolitaryBranch::m_r_one : SolitaryBranch::m_neg_r_one);
    CnoidalSolution out;
    out.kind = kind;
    out.phys = phys;
    out.R = sign == RSign::plus ? 1.0 : -1.0;
    out.wave = {sol.B, sol.omega, sol.sigma, sol.lambda, 1.0};
    out.prof = {sol.d0, 0.0, sol.d2, sol.h0, 0.0, sol.h2};
    return out;
  }

  const double R = big_r(m, sign);
  const FamilyCoeffs fc = family_coeffs(kind, phys, sigma, m, R);
  if (!(fc.lambda2 > 0)) {
    throw DomainError("cnoidal_params: lambda^2 <= 0 on the branch " +
                      std::string(branch_name(sign)));
  }

  CnoidalSolution out;
  out.kind = kind;
  out.phys = phys;
  out.R = R;
  out.wave = {fc.B, fc.omega, sigma, std::sqrt(fc.lambda2), m};
  out.prof = {fc.d0, 0.0, fc.d2, fc.h0, 0.0, fc.h2};

  // construction invariants: R^2 and the h2/d2 ratio law
  const double r2err = std::abs(R * R - (m * m * m * m - m * m + 1));
  if (r2err > 1e-14) throw NumericalError("R^2 invariant violated");
  if (out.prof.d2 != 0.0) {
    const double ratio = out.prof.h2 / out.prof.d2;
    const double want = quoted_ratio(kind, phys, sigma);
    if (std::abs(ratio - want) > 1e-12 * std::max(1.0, std::abs(want))) {
      throw NumericalError("h2/d2 ratio law violated at construction");
    }
  }
  return out;
}

SolitarySolution solitary_limit(SystemKind kind, const PhysicalParams& phys,
                                double sigma, SolitaryBranch branch) {
  const ValidityReport rep = validity(kind, phys, sigma);
  if (!rep.sigma_valid) {
    throw DomainError("solitary_limit: validity violated: " + rep.violated);
  }
  const double R = branch == SolitaryBranch::m_r_one ? 1.0 : -1.0;
  const FamilyCoeffs fc = family_coeffs(kind, phys, sigma, 1.0, R);
  if (!(fc.lambda2 > 0)) {
    throw DomainError(std::string("solitary_limit: lambda^2 <= 0 on branch ") +
                      (branch == SolitaryBranch::m_r_one ? "m = R = 1" : "m = -R = 1"));
  }
  SolitarySolution out;
  out.kind = kind;
  out.phys = phys;
  out.branch = branch;
  out.B = fc.B;
  out.omega = fc.omega;
  out.sigma = sigma;
  out.lambda = std::sqrt(fc.lambda2);
  out.d0 = fc.d0;
  out.d2 = fc.d2;
  out.h0 = fc.h0;
  out.h2 = fc.h2;
  return out;
}

SyncReport synchronized_condition(SystemKind kind, const PhysicalParams& phys,
                                  double candidate) {
  phys.validate();
  const double a = phys.a, b = phys.b, c = phys.c, mu0 = phys.mu0, mu1 = phys.mu1;
  SyncReport rep;
  switch (kind) {
    case SystemKind::kdv_kdv: {
      rep.constrained = 's';
      guard_denominator(a - c, std::max(a, c), "a - c");
      rep.exact_sigma = (4 * a * a + 3 * a * a * c * mu1 * mu1 - 2 * a * b * c * mu1 -
                         4 * a * c * mu0 - b * b * c) /
                        (4 * a * (a - c));
      rep.residual = family_kdv_kdv(phys, candidate, 1.0, 1.0).h0;
      break;
    }
    case SystemKind::bbm_bbm: {
      // quadratic in B; vanishing makes the m = -R = 1 offset h0 vanish
      rep.constrained = 'B';
      const double B = candidate;
      rep.residual = (a * a * c * mu0 * mu1 - a * b * c) * B * B +
                     (2 * a * b * c * mu1 + 2 * a * c * mu0 - 2 * a * a * a * mu1 * mu1 -
                      2 * a * a) *
                         B +
                     (a * a * mu0 * mu1 + b * c - a * b - a * c * mu0 * mu1);
      break;
    }
    case SystemKind::kdv_bbm: {
      rep.constrained = 's';
      const double B = (a * mu1 - b) / (2 * a);
      const double sig = candidate;
      rep.residual =
          (sig + 3 * a * B * B + 2 * b * B - mu0) / a - (sig - 1) / (c * sig);
      break;
    }
    case SystemKind::bbm_kdv: {
      // cubic in B; vanishing makes the m = R = 1 offset h0 vanish
      rep.constrained = 'B';
      const double B = candidate;
      rep.residual =
          (2 * a * a * b * c * mu1 * mu1 + 2 * a * b * c -
           2 * a * a * a * c * mu0 * mu1 * mu1 * mu1 - 2 * a * a * c * mu0 * mu1) *
              B * B * B +
          (-4 * a * a * b * c * mu1 * mu1 * mu1 - 4 * a * a * c * mu0 * mu1 * mu1 -
           4 * a * b * c * mu1 - 4 * a * c * mu0) *
              B * B +
          (2 * a * a * a * mu0 * mu1 * mu1 * mu1 + 2 * a * a * c * mu0 * mu1 * mu1 * mu1 +
           2 * a * a * mu0 * mu1 + 2 * a * c * mu0 * mu1 - 2 * a * a * b * mu1 * mu1 -
           2 * a * b - 2 * a * b * c * mu1 * mu1 - 2 * b * c) *
              B +
          (2 * a * b * mu0 * mu1 - a * a * mu0 * mu0 * mu1 * mu1 - b * b);
      break;
    }
  }
  return rep;
}

namespace {

std::pair<double, double> profiles_at(const ProfileCoeffs& p, const WaveParams& w,
                                      double xi) {
  const double cn = elliptic::jacobi_triple(w.lambda * xi, w.m).cn;
  const double f = p.d0 + p.d1 * cn + p.d2 * cn * cn;
  const double g = p.h0 + p.h1 * cn + p.h2 * cn * cn;
  return {f, g};
}

std::pair<std::complex<double>, double> fields_at(const ProfileCoeffs& p,
                                                  const WaveParams& w, double x,
                                                  double t) {
  const double xi = x - w.sigma * t;
  const auto [f, g] = profiles_at(p, w, xi);
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, w.omega * t + w.B * xi));
  return {phase * f, g};
}

ProfileCoeffs solitary_prof(const SolitarySolution& s) {
  return {s.d0, 0.0, s.d2, s.h0, 0.0, s.h2};
}

WaveParams solitary_wave(const SolitarySolution& s) {
  return {s.B, s.omega, s.sigma, s.lambda, 1.0};
}

}  // namespace

std::pair<double, double> evaluate_profiles(const CnoidalSolution& sol, double xi) {
  return profiles_at(sol.prof, sol.wave, xi);
}
std::pair<double, double> evaluate_profiles(const SolitarySolution& sol, double xi) {
  return profiles_at(solitary_prof(sol), solitary_wave(sol), xi);
}
std::pair<double, double> evaluate_profiles(const SemiTrivialSolution& sol, double xi) {
  return profiles_at(sol.prof, sol.wave, xi);
}

std::pair<std::complex<double>, double> evaluate_fields(const CnoidalSolution& sol,
                                                        double x, double t) {
  return fields_at(sol.prof, sol.wave, x, t);
}
std::pair<std::complex<double>, double> evaluate_fields(const SolitarySolution& sol,
                                                        double x, double t) {
  return fields_at(solitary_prof(sol), solitary_wave(sol), x, t);
}
std::pair<std::complex<double>, double> evaluate_fields(const SemiTrivialSolution& sol,
                                                        double x, double t) {
  return fields_at(sol.prof, sol.wave, x, t);
}

double fundamental_period(const ProfileCoeffs& prof, const WaveParams& wave) {
  if (wave.m >= 1.0) throw DomainError("fundamental_period: solitary profiles are not periodic");
  const double K = elliptic::complete_k(wave.m);
  const bool has_cn1 = prof.d1 != 0.0 || prof.h1 != 0.0;
  return (has_cn1 ? 4.0 : 2.0) * K / wave.lambda;
}

double fundamental_period(const CnoidalSolution& sol) {
  return fundamental_period(sol.prof, sol.wave);
}

double fundamental_period(const SemiTrivialSolution& sol) {
  return fundamental_period(sol.prof, sol.wave);
}

}  // namespace cnoidal
