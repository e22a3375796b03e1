// The 13-entry coefficient tables k_{j,q}, one per system, transcribed
// term-by-term with no symbolic simplification.  Each entry also records the
// largest |monomial| that contributed, so "vanishes" can be tested relative
// to the entry's own scale.

#include <cmath>

#include "cnoidal/model.hpp"

namespace cnoidal {

namespace {

// accumulates a sum and the largest |term|
struct Acc {
  double sum = 0.0;
  double scale = 0.0;
  Acc& operator<<(double term) {
    sum += term;
    scale = std::max(scale, std::abs(term));
    return *this;
  }
};

struct Ctx {
  double a, b, c, mu0, mu1;
  double B, w, sig, lam, m;
  double d0, d1, d2, h0, h1, h2;
  double l2, m2;  // lambda^2, m^2
};

void store(CoefficientSet& out, int j, int q, const Acc& acc) {
  int i = CoefficientSet::flat(j, q);
  out.value[i] = acc.sum;
  out.scale[i] = acc.scale;
}

// rows 1 and 2 shared by the two systems whose u-equation is KdV-dispersed
void rows12_kdv_u(const Ctx& v, CoefficientSet& out) {
  const auto [a, b, c, mu0, mu1, B, w, sig, lam, m, d0, d1, d2, h0, h1, h2, l2, m2] = v;
  (void)c; (void)lam; (void)m;
  Acc k13; k13 << 4 * l2 * a * d2 * m2 << -2.0 / 3 * d2 * h2;
  store(out, 1, 3, k13);
  Acc k12; k12 << l2 * a * d1 * m2 << -0.5 * d1 * h2 << -0.5 * d2 * h1;
  store(out, 1, 2, k12);
  Acc k11;
  k11 << d2 * a * B * B << -8.0 / 3 * l2 * a * d2 * m2 << 2.0 / 3 * d2 * b * B
      << 4.0 / 3 * d2 * a * l2 << -1.0 / 3 * d0 * h2 << -1.0 / 3 * d1 * h1
      << -1.0 / 3 * d2 * h0 << -1.0 / 3 * d2 * mu0 << 1.0 / 3 * d2 * sig;
  store(out, 1, 1, k11);
  Acc k10;
  k10 << 0.5 * B * B * a * d1 << -1.0 / 3 * l2 * a * d1 * m2 << 1.0 / 3 * B * b * d1
      << 1.0 / 6 * l2 * a * d1 << -1.0 / 6 * d0 * h1 << -1.0 / 6 * d1 * h0
      << -1.0 / 6 * d1 * mu0 << 1.0 / 6 * d1 * sig;
  store(out, 1, 0, k10);

  Acc k24;
  k24 << -18 * B * a * d2 * l2 * m2 << -6 * b * d2 * l2 * m2 << B * d2 * h2
      << d2 * h2 * mu1;
  store(out, 2, 4, k24);
  Acc k23;
  k23 << -6 * B * a * d1 * l2 * m2 << -2 * b * d1 * l2 * m2 << B * d1 * h2
      << B * d2 * h1 << d1 * h2 * mu1 << d2 * h1 * mu1;
  store(out, 2, 3, k23);
  Acc k22;
  k22 << -B * B * B * a * d2 << 24 * B * a * d2 * l2 * m2 << -B * B * b * d2
      << -12 * B * a * d2 * l2 << 8 * b * d2 * l2 * m2 << B * d0 * h2
      << B * d1 * h1 << B * d2 * h0 << B * d2 * mu0 << -B * d2 * sig
      << -4 * b * d2 * l2 << d0 * h2 * mu1 << d1 * h1 * mu1 << d2 * h0 * mu1
      << d2 * w;
  store(out, 2, 2, k22);
  Acc k21;
  k21 << -B * B * B * a * d1 << 6 * B * a * d1 * l2 * m2 << -B * B * b * d1
      << -3 * B * a * d1 * l2 << 2 * b * d1 * l2 * m2 << B * d0 * h1
      << B * d1 * h0 << B * d1 * mu0 << -B * d1 * sig << -b * d1 * l2
      << d0 * h1 * mu1 << d1 * h0 * mu1 << d1 * w;
  store(out, 2, 1, k21);
  Acc k20;
  k20 << -B * B * B * a * d0 << -6 * B * a * d2 * l2 * m2 << -B * B * b * d0
      << 6 * B * a * d2 * l2 << -2 * b * d2 * l2 * m2 << B * d0 * h0
      << B * d0 * mu0 << -B * d0 * sig << 2 * b * d2 * l2 << d0 * h0 * mu1
      << d0 * w;
  store(out, 2, 0, k20);
}

// rows 1 and 2 shared by the two systems whose u-equation is BBM-dispersed
void rows12_bbm_u(const Ctx& v, CoefficientSet& out) {
  const auto [a, b, c, mu0, mu1, B, w, sig, lam, m, d0, d1, d2, h0, h1, h2, l2, m2] = v;
  (void)c; (void)lam; (void)m;
  Acc k13; k13 << -2.0 / 3 * d2 * h2 << 4 * l2 * a * d2 * m2 * sig;
  store(out, 1, 3, k13);
  Acc k12; k12 << -0.5 * d1 * h2 << -0.5 * d2 * h1 << l2 * a * d1 * m2 * sig;
  store(out, 1, 2, k12);
  Acc k11;
  k11 << 2.0 / 3 * B * b * d2 << -1.0 / 3 * d0 * h2 << -1.0 / 3 * d1 * h1
      << -1.0 / 3 * d2 * h0 << -1.0 / 3 * d2 * mu0 << 1.0 / 3 * d2 * sig
      << 4.0 / 3 * l2 * a * d2 * sig << B * B * a * d2 * sig
      << -2.0 / 3 * B * a * d2 * w << -8.0 / 3 * l2 * a * d2 * m2 * sig;
  store(out, 1, 1, k11);
  Acc k10;
  k10 << 1.0 / 3 * B * b * d1 << -1.0 / 6 * d0 * h1 << -1.0 / 6 * d1 * h0
      << -1.0 / 6 * d1 * mu0 << 1.0 / 6 * d1 * sig << 0.5 * B * B * a * d1 * sig
      << -1.0 / 3 * B * a * d1 * w << -1.0 / 3 * l2 * a * d1 * m2 * sig
      << 1.0 / 6 * l2 * a * d1 * sig;
  store(out, 1, 0, k10);

  Acc k24;
  k24 << -18 * B * a * d2 * l2 * m2 * sig << 6 * a * d2 * l2 * m2 * w
      << -6 * b * d2 * l2 * m2 << B * d2 * h2 << d2 * h2 * mu1;
  store(out, 2, 4, k24);
  Acc k23;
  k23 << -6 * B * a * d1 * l2 * m2 * sig << 2 * a * d1 * l2 * m2 * w
      << -2 * b * d1 * l2 * m2 << B * d1 * h2 << B * d2 * h1 << d1 * h2 * mu1
      << d2 * h1 * mu1;
  store(out, 2, 3, k23);
  Acc k22;
  k22 << 6 * B * a * d2 * l2 * m2 * sig
      << 6 * (-B * (-m2 + 1) + B * m2) * a * d2 * l2 * sig
      << -6 * B * (-m2 + 1) * a * d2 * l2 * sig << -2 * a * d2 * l2 * m2 * w
      << -B * B * B * a * d2 * sig << B * B * a * d2 * w
      << -2 * (2 * m2 - 1) * a * d2 * l2 * w << 2 * (-m2 + 1) * a * d2 * l2 * w
      << 2 * b * d2 * l2 * m2 << B * d2 * mu0 << B * d0 * h2 << d1 * h1 * mu1
      << d2 * h0 * mu1 << -B * B * b * d2 << d2 * w << -B * d2 * sig
      << d0 * h2 * mu1 << B * d1 * h1 << B * d2 * h0
      << 2 * (2 * m2 - 1) * b * d2 * l2 << -2 * (-m2 + 1) * b * d2 * l2;
  store(out, 2, 2, k22);
  Acc k21;
  k21 << 3 * B * a * d1 * l2 * m2 * sig << -3 * B * (-m2 + 1) * a * d1 * l2 * sig
      << -a * d1 * l2 * m2 * w << B * B * a * d1 * w << -B * B * B * a * d1 * sig
      << (-m2 + 1) * a * d1 * l2 * w << b * d1 * l2 * m2 << -B * B * b * d1
      << B * d0 * h1 << B * d1 * h0 << B * d1 * mu0 << -B * d1 * sig
      << d0 * h1 * mu1 << d1 * h0 * mu1 << d1 * w << -(-m2 + 1) * b * d1 * l2;
  store(out, 2, 1, k21);
  Acc k20;
  k20 << -B * B * B * a * d0 * sig << B * B * a * d0 * w << d0 * w
      << -B * B * b * d0 << B * d0 * h0 << B * d0 * mu0 << -B * d0 * sig
      << d0 * h0 * mu1 << 6 * B * (-m2 + 1) * a * d2 * l2 * sig
      << -2 * (-m2 + 1) * a * d2 * l2 * w << 2 * (-m2 + 1) * b * d2 * l2;
  store(out, 2, 0, k20);
}

// row 3 of the systems whose v-equation is KdV-dispersed
void row3_kdv_v(const Ctx& v, CoefficientSet& out) {
  const auto [a, b, c, mu0, mu1, B, w, sig, lam, m, d0, d1, d2, h0, h1, h2, l2, m2] = v;
  (void)a; (void)b; (void)mu0; (void)mu1; (void)B; (void)w; (void)lam; (void)m;
  Acc k33; k33 << 1.0 / 12 * d2 * d2 << 1.0 / 12 * h2 * h2 << -l2 * c * h2 * m2;
  store(out, 3, 3, k33);
  Acc k32;
  k32 << -0.25 * l2 * c * h1 * m2 << 0.125 * d1 * d2 << 0.125 * h1 * h2;
  store(out, 3, 2, k32);
  Acc k31;
  k31 << -1.0 / 3 * l2 * c * h2 << 2.0 / 3 * l2 * c * h2 * m2
      << 1.0 / 12 * d0 * d2 << 1.0 / 12 * h0 * h2 << -1.0 / 12 * h2 * sig
      << 1.0 / 24 * d1 * d1 << 1.0 / 24 * h1 * h1 << 1.0 / 12 * h2;
  store(out, 3, 1, k31);
  Acc k30;
  k30 << 1.0 / 12 * l2 * c * h1 * m2 << 1.0 / 24 * d0 * d1 << 1.0 / 24 * h0 * h1
      << -1.0 / 24 * h1 * sig << -1.0 / 24 * l2 * c * h1 << 1.0 / 24 * h1;
  store(out, 3, 0, k30);
}

// row 3 of the BBM-BBM system
void row3_bbm_bbm(const Ctx& v, CoefficientSet& out) {
  const auto [a, b, c, mu0, mu1, B, w, sig, lam, m, d0, d1, d2, h0, h1, h2, l2, m2] = v;
  (void)a; (void)b; (void)mu0; (void)mu1; (void)B; (void)w; (void)lam; (void)m;
  Acc k33; k33 << 24 * c * h2 * l2 * m2 * sig << -2 * d2 * d2 << -2 * h2 * h2;
  store(out, 3, 3, k33);
  Acc k32; k32 << 6 * l2 * c * h1 * m2 * sig << -3 * d1 * d2 << -3 * h1 * h2;
  store(out, 3, 2, k32);
  Acc k31;
  k31 << -16 * c * h2 * l2 * m2 * sig << 8 * c * h2 * l2 * sig << -2 * d0 * d2
      << -d1 * d1 << -2 * h0 * h2 << -h1 * h1 << 2 * h2 * sig << -2 * h2;
  store(out, 3, 1, k31);
  Acc k30;
  k30 << -2 * l2 * c * h1 * m2 * sig << l2 * c * h1 * sig << -d0 * d1
      << -h0 * h1 << h1 * sig << -h1;
  store(out, 3, 0, k30);
}

// row 3 of the KdV-BBM system
void row3_kdv_bbm(const Ctx& v, CoefficientSet& out) {
  const auto [a, b, c, mu0, mu1, B, w, sig, lam, m, d0, d1, d2, h0, h1, h2, l2, m2] = v;
  (void)a; (void)b; (void)mu0; (void)mu1; (void)B; (void)w; (void)lam; (void)m;
  Acc k33;
  k33 << 1.0 / 3 * d2 * d2 << 1.0 / 3 * h2 * h2 << -4 * l2 * c * h2 * m2 * sig;
  store(out, 3, 3, k33);
  Acc k32;
  k32 << 0.5 * d1 * d2 << 0.5 * h1 * h2 << -l2 * c * h1 * m2 * sig;
  store(out, 3, 2, k32);
  Acc k31;
  k31 << 1.0 / 3 * d0 * d2 << 1.0 / 3 * h0 * h2 << -1.0 / 3 * h2 * sig
      << -4.0 / 3 * l2 * c * h2 * sig << 1.0 / 6 * d1 * d1 << 1.0 / 6 * h1 * h1
      << 1.0 / 3 * h2 << 8.0 / 3 * l2 * c * h2 * m2 * sig;
  store(out, 3, 1, k31);
  Acc k30;
  k30 << 1.0 / 6 * h1 << -1.0 / 6 * l2 * c * h1 * sig << 1.0 / 6 * d0 * d1
      << 1.0 / 6 * h0 * h1 << -1.0 / 6 * h1 * sig << 1.0 / 3 * l2 * c * h1 * m2 * sig;
  store(out, 3, 0, k30);
}

}  // namespace

std::pair<int, int> CoefficientSet::index(int i) {
  if (i < 4) return {1, i};
  if (i < 9) return {2, i - 4};
  return {3, i - 9};
}

int CoefficientSet::flat(int j, int q) {
  switch (j) {
    case 1: return q;
    case 2: return 4 + q;
    case 3: return 9 + q;
    default: throw DomainError("coefficient row j must be 1, 2 or 3");
  }
}

double CoefficientSet::scaled(int i) const {
  return scale[i] > 0.0 ? std::abs(value[i]) / scale[i] : 0.0;
}

double CoefficientSet::max_scaled() const {
  double worst = 0.0;
  for (int i = 0; i < count; ++i) worst = std::max(worst, scaled(i));
  return worst;
}

int CoefficientSet::worst() const {
  int arg = 0;
  double worst = -1.0;
  for (int i = 0; i < count; ++i) {
    if (scaled(i) > worst) {
      worst = scaled(i);
      arg = i;
    }
  }
  return arg;
}

CoefficientSet coefficient_set(SystemKind kind, const PhysicalParams& phys,
                               const ProfileCoeffs& prof, const WaveParams& wave) {
  Ctx v{phys.a,    phys.b,    phys.c,    phys.mu0,  phys.mu1, wave.B,
        wave.omega, wave.sigma, wave.lambda, wave.m,  prof.d0,  prof.d1,
        prof.d2,   prof.h0,   prof.h1,   prof.h2,
        wave.lambda * wave.lambda, wave.m * wave.m};
  CoefficientSet out;
  switch (kind) {
    case SystemKind::kdv_kdv:
      rows12_kdv_u(v, out);
      row3_kdv_v(v, out);
      break;
    case SystemKind::bbm_bbm:
      rows12_bbm_u(v, out);
      row3_bbm_bbm(v, out);
      break;
    case SystemKind::kdv_bbm:
      rows12_kdv_u(v, out);
      row3_kdv_bbm(v, out);
      break;
    case SystemKind::bbm_kdv:
      rows12_bbm_u(v, out);
      row3_kdv_v(v, out);
      break;
  }
  return out;
}

}  // namespace cnoidal
