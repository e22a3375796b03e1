// Trivial and semi-trivial solution catalogs: constant v, plane-wave u over
// constant v, cnoidal v with u = 0, and (for the mixed-dispersion systems)
// the f = d1 cn family at the pinned wave speed.

#include <cmath>

#include "cnoidal/solutions.hpp"

namespace cnoidal {

namespace {

double get_or(const ParamMap& map, const std::string& key, double fallback) {
  auto it = map.find(key);
  return it == map.end() ? fallback : it->second;
}

SemiTrivialSolution base(SystemKind kind, const PhysicalParams& phys, int family) {
  SemiTrivialSolution s;
  s.kind = kind;
  s.family = family;
  s.phys = phys;
  s.wave = {0.0, 0.0, 1.0, 1.0, 0.0};
  return s;
}

// u = 0, v = h0
SemiTrivialSolution fam_constant(SystemKind kind, const PhysicalParams& phys,
                                 const ParamMap& free) {
  auto s = base(kind, phys, 1);
  const double h0 = get_or(free, "h0", 1.0);
  s.free["h0"] = h0;
  s.prof.h0 = h0;
  return s;
}

// u = e^{i omega t} e^{iB xi} d0, v = h0, sigma constrained
SemiTrivialSolution fam_plane_wave(SystemKind kind, const PhysicalParams& phys,
                                   const ParamMap& free) {
  auto s = base(kind, phys, 2);
  const double B = get_or(free, "B", 0.5);
  const double d0 = get_or(free, "d0", 1.0);
  const double h0 = get_or(free, "h0", 0.5);
  const double omega = get_or(free, "omega", 1.0);
  if (B == 0.0) throw ConstraintError("plane-wave family requires B != 0");
  s.free = {{"B", B}, {"d0", d0}, {"h0", h0}, {"omega", omega}};
  const double a = phys.a, b = phys.b, mu0 = phys.mu0, mu1 = phys.mu1;
  double sigma;
  if (!u_dispersion_is_bbm(kind)) {
    sigma = (omega - a * B * B * B - b * B * B + B * h0 + B * mu0 + h0 * mu1) / B;
  } else {
    sigma = (a * B * B * omega - b * B * B + B * h0 + B * mu0 + h0 * mu1 + omega) /
            (B * (a * B * B + 1));
  }
  s.derived["sigma"] = sigma;
  s.prof.d0 = d0;
  s.prof.h0 = h0;
  s.wave = {B, omega, sigma, 1.0, 0.0};
  return s;
}

// u = 0, v = -(2/3) h2 + h2/(3 m^2) + sigma - 1 + h2 cn^2(lambda xi, m)
SemiTrivialSolution fam_cnoidal_v(SystemKind kind, const PhysicalParams& phys,
                                  int family, const ParamMap& free) {
  auto s = base(kind, phys, family);
  const double h2 = get_or(free, "h2", 1.0);
  const double sigma = get_or(free, "sigma", 2.0);
  const double m = get_or(free, "m", 0.5);
  if (!(h2 > 0)) throw ConstraintError("cnoidal-v family requires h2 > 0");
  if (!(sigma > 0)) throw ConstraintError("cnoidal-v family requires sigma > 0");
  if (!(m > 0 && m <= 1)) {
    throw ConstraintError("cnoidal-v family requires m in (0, 1]");
  }
  s.free = {{"h2", h2}, {"sigma", sigma}, {"m", m}};
  const double m2 = m * m;
  const double lambda = v_dispersion_is_bbm(kind)
                            ? std::sqrt(h2 / (12 * phys.c * m2 * sigma))
                            : std::sqrt(h2 / (12 * phys.c * m2));
  const double h0 = -2.0 / 3 * h2 + h2 / (3 * m2) + sigma - 1;
  s.derived = {{"lambda", lambda}, {"h0", h0}};
  s.prof.h0 = h0;
  s.prof.h2 = h2;
  s.wave = {0.0, 0.0, sigma, lambda, m};
  return s;
}

// KdV-BBM: u = e^{i omega t} e^{iB xi} d1 cn, v = h0 + h2 cn^2, sigma = a0/(6c)
SemiTrivialSolution fam3_kdv_bbm(const PhysicalParams& phys, const ParamMap& free) {
  auto s = base(SystemKind::kdv_bbm, phys, 3);
  const double h2 = get_or(free, "h2", 0.2);
  const double m = get_or(free, "m", 0.5);
  const double sign = get_or(free, "d1_sign", +1.0) < 0 ? -1.0 : 1.0;
  if (!(m > 0 && m <= 1)) throw ConstraintError("family 3 requires m in (0, 1]");
  if (!(h2 > 0)) throw ConstraintError("family 3 requires h2 > 0");
  const double a = phys.a, b = phys.b, c = phys.c, mu0 = phys.mu0, mu1 = phys.mu1;
  const double m2 = m * m;
  const double gate = 9 * a * a * m2 * mu1 * mu1 - 6 * a * b * m2 * mu1 -
                      4 * a * h2 * m2 - 12 * a * m2 * mu0 - 3 * b * b * m2 +
                      2 * a * h2 + 12 * a * m2;
  if (!(gate < 0)) {
    throw ConstraintError(
        "family 3 requires 9 a0^2 m^2 mu1^2 - 6 a0 b m^2 mu1 - 4 a0 h2 m^2 "
        "- 12 a0 m^2 mu0 - 3 b^2 m^2 + 2 a0 h2 + 12 a0 m^2 < 0");
  }
  s.free = {{"h2", h2}, {"m", m}, {"d1_sign", sign}};
  const double d1 = sign * std::sqrt(-6 * a * h2 * m2 * gate) / (6 * a * m2);
  const double h0 = (9 * a * a * c * m2 * mu1 * mu1 - 6 * a * b * c * m2 * mu1 -
                     12 * a * c * h2 * m2 - 12 * a * c * m2 * mu0 -
                     3 * b * b * c * m2 + 2 * a * a * m2 + 6 * a * c * h2) /
                    (12 * a * c * m2);
  const double B = (a * mu1 - b) / (2 * a);
  const double omega =
      -mu1 * (6 * a * c * mu1 * mu1 - 6 * b * c * mu1 - 6 * c * mu0 + a) / (6 * c);
  const double lambda = std::sqrt(h2 / (2 * a * m2));
  const double sigma = a / (6 * c);
  s.derived = {{"d1", d1}, {"h0", h0}, {"B", B},
               {"omega", omega}, {"lambda", lambda}, {"sigma", sigma}};
  s.prof.d1 = d1;
  s.prof.h0 = h0;
  s.prof.h2 = h2;
  s.wave = {B, omega, sigma, lambda, m};
  return s;
}

// BBM-KdV: u = e^{i omega t} e^{iB xi} d1 cn, v = h0 + h2 cn^2, sigma = 6c/a1
SemiTrivialSolution fam3_bbm_kdv(const PhysicalParams& phys, const ParamMap& free) {
  auto s = base(SystemKind::bbm_kdv, phys, 3);
  const double h2 = get_or(free, "h2", 1.0);
  const double m = get_or(free, "m", 0.5);
  const double sign = get_or(free, "d1_sign", +1.0) < 0 ? -1.0 : 1.0;
  if (!(m > 0 && m <= 1)) throw ConstraintError("family 3 requires m in (0, 1]");
  if (!(h2 > 0)) throw ConstraintError("family 3 requires h2 > 0");
  const double a = phys.a, b = phys.b, c = phys.c, mu0 = phys.mu0, mu1 = phys.mu1;
  const double m2 = m * m, u1 = mu1;
  const double gate =
      8 * a * a * c * h2 * m2 * u1 * u1 * u1 * u1 - 4 * a * a * c * h2 * u1 * u1 * u1 * u1 -
      24 * a * a * c * m2 * u1 * u1 * u1 * u1 + a * a * m2 * mu0 * mu0 * u1 * u1 +
      24 * a * b * c * m2 * u1 * u1 * u1 + 16 * a * c * h2 * m2 * u1 * u1 +
      24 * a * c * m2 * mu0 * u1 * u1 - 2 * a * b * m2 * mu0 * u1 -
      8 * a * c * h2 * u1 * u1 - 48 * a * c * m2 * u1 * u1 + 24 * b * c * m2 * u1 +
      b * b * m2 + 8 * c * h2 * m2 + 24 * c * m2 * mu0 - 4 * c * h2 - 24 * c * m2;
  if (!(gate > 0)) {
    throw ConstraintError(
        "family 3 requires 8 a1^2 c h2 m^2 mu1^4 - 4 a1^2 c h2 mu1^4 "
        "- 24 a1^2 c m^2 mu1^4 + a1^2 m^2 mu0^2 mu1^2 + 24 a1 b c m^2 mu1^3 "
        "+ 16 a1 c h2 m^2 mu1^2 + 24 a1 c m^2 mu0 mu1^2 - 2 a1 b m^2 mu0 mu1 "
        "- 8 a1 c h2 mu1^2 - 48 a1 c m^2 mu1^2 + 24 b c m^2 mu1 + b^2 m^2 "
        "+ 8 c h2 m^2 + 24 c m^2 mu0 - 4 c h2 - 24 c m^2 > 0");
  }
  s.free = {{"h2", h2}, {"m", m}, {"d1_sign", sign}};
  const double d1 =
      sign * std::sqrt(3 * c * h2 * m2 * gate) / (6 * c * m2 * (a * u1 * u1 + 1));
  const double h0 =
      -(24 * a * a * a * c * h2 * m2 * u1 * u1 * u1 * u1 -
        12 * a * a * a * c * h2 * u1 * u1 * u1 * u1 -
        144 * a * a * c * c * m2 * u1 * u1 * u1 * u1 +
        a * a * a * m2 * mu0 * mu0 * u1 * u1 + 24 * a * a * b * c * m2 * u1 * u1 * u1 +
        48 * a * a * c * h2 * m2 * u1 * u1 + 24 * a * a * c * m2 * mu0 * u1 * u1 -
        2 * a * a * b * m2 * mu0 * u1 - 24 * a * a * c * h2 * u1 * u1 -
        288 * a * c * c * m2 * u1 * u1 + 24 * a * b * c * m2 * u1 + a * b * b * m2 +
        24 * a * c * h2 * m2 + 24 * a * c * m2 * mu0 - 12 * a * c * h2 -
        144 * c * c * m2) /
      (24 * (a * a * u1 * u1 * u1 * u1 + 2 * a * u1 * u1 + 1) * a * c * m2);
  const double B = (a * mu0 * u1 - b) / (12 * c * (a * u1 * u1 + 1));
  const double omega =
      u1 * (-6 * a * c * u1 * u1 + a * b * u1 + a * mu0 - 6 * c) / ((a * u1 * u1 + 1) * a);
  const double lambda = std::sqrt(h2 / (12 * c * m2));
  const double sigma = 6 * c / a;
  s.derived = {{"d1", d1}, {"h0", h0}, {"B", B},
               {"omega", omega}, {"lambda", lambda}, {"sigma", sigma}};
  s.prof.d1 = d1;
  s.prof.h0 = h0;
  s.prof.h2 = h2;
  s.wave = {B, omega, sigma, lambda, m};
  return s;
}

}  // namespace

int semi_trivial_family_count(SystemKind kind) {
  return (kind == SystemKind::kdv_bbm || kind == SystemKind::bbm_kdv) ? 4 : 3;
}

SemiTrivialSolution semi_trivial_family(SystemKind kind, const PhysicalParams& phys,
                                        int family, const ParamMap& free) {
  phys.validate();
  if (family < 1 || family > semi_trivial_family_count(kind)) {
    throw DomainError("semi_trivial_family: no family " + std::to_string(family) +
                      " for system " + to_string(kind));
  }
  switch (family) {
    case 1: return fam_constant(kind, phys, free);
    case 2: return fam_plane_wave(kind, phys, free);
    case 3:
      if (kind == SystemKind::kdv_bbm) return fam3_kdv_bbm(phys, free);
      if (kind == SystemKind::bbm_kdv) return fam3_bbm_kdv(phys, free);
      return fam_cnoidal_v(kind, phys, 3, free);
    default: return fam_cnoidal_v(kind, phys, 4, free);
  }
}

std::vector<SemiTrivialSolution> semi_trivial_catalog(SystemKind kind,
                                                      const PhysicalParams& phys,
                                                      const ParamMap& free) {
  std::vector<SemiTrivialSolution> out;
  for (int fam = 1; fam <= semi_trivial_family_count(kind); ++fam) {
    out.push_back(semi_trivial_family(kind, phys, fam, free));
  }
  return out;
}

}  // namespace cnoidal
