#include "cnoidal/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cnoidal::elliptic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAgmTol = 1e-15;  // kernel accuracy floor
constexpr int kAgmMaxIter = 32;

void require_modulus(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError("modulus m must lie in [0, 1], got " + std::to_string(m));
  }
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Jacobi amplitude for |u| <= 2K via the AGM / descending Landen recursion
// (Abramowitz & Stegun 16.4, 17.6).
double am_agm(double u, double m) {
  double a[kAgmMaxIter + 1], c[kAgmMaxIter + 1];
  a[0] = 1.0;
  c[0] = m;
  double b = std::sqrt((1.0 - m) * (1.0 + m));
  int n = 0;
  while (n < kAgmMaxIter && std::abs(c[n]) > kAgmTol * a[n]) {
    double an = 0.5 * (a[n] + b);
    double cn1 = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
    a[n] = an;
    c[n] = cn1;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i >= 1; --i) {
    double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }
  return phi;
}

}  // namespace

double modulus_from_parameter(double parameter) {
  if (!(parameter >= 0.0 && parameter <= 1.0)) {
    throw DomainError("elliptic parameter m^2 must lie in [0, 1], got " +
                      std::to_string(parameter));
  }
  return std::sqrt(parameter);
}

double complete_k(double m) {
  require_modulus(m);
  if (m == 1.0) throw DomainError("K(m) diverges at m = 1");
  double a = 1.0;
  double b = std::sqrt((1.0 - m) * (1.0 + m));
  for (int i = 0; i < kAgmMaxIter && std::abs(a - b) > kAgmTol * a; ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double jacobi_am(double u, double m) {
  require_modulus(m);
  if (!std::isfinite(u)) throw DomainError("jacobi_am: non-finite argument");
  if (m == 0.0) return u;
  if (m == 1.0) return std::asin(std::tanh(u));  // gudermannian
  const double quarter = complete_k(m);
  const double period = 4.0 * quarter;
  const double winding = std::nearbyint(u / period);
  const double ur = u - winding * period;  // |ur| <= 2K
  return am_agm(ur, m) + winding * 2.0 * kPi;
}

JacobiTriple jacobi_triple(double u, double m) {
  require_modulus(m);
  if (!std::isfinite(u)) throw DomainError("jacobi_triple: non-finite argument");
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  const double phi = jacobi_am(u, m);
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(std::max(0.0, 1.0 - m * m * sn * sn));
  return {sn, cn, dn};
}

CnPowerDerivs cn_power_derivs(int r, double lambda, double xi, double m) {
  if (r < 0) throw DomainError("cn_power_derivs: power r must be >= 0");
  if (r == 0) return {1.0, 0.0, 0.0, 0.0};
  const JacobiTriple j = jacobi_triple(lambda * xi, m);
  const double m2 = m * m;
  const double sd = j.sn * j.dn;
  const double l2 = lambda * lambda;

  // A vanishing structure coefficient must suppress its cn power entirely:
  // for r = 1, 2 the guarded powers would otherwise be negative.
  auto term = [&](double coef, int p) {
    return coef == 0.0 ? 0.0 : coef * ipow(j.cn, p);
  };

  CnPowerDerivs out;
  out.value = ipow(j.cn, r);
  out.d1 = -r * lambda * term(1.0, r - 1) * sd;
  out.d2 = -r * l2 *
           (term((r + 1) * m2, r + 2) + term(r * (1.0 - 2.0 * m2), r) +
            term((r - 1) * (m2 - 1.0), r - 2));
  out.d3 = r * l2 * lambda * sd *
           (term(double(r + 1) * (r + 2) * m2, r + 1) +
            term(double(r) * r * (1.0 - 2.0 * m2), r - 1) +
            term(double(r - 1) * (r - 2) * (m2 - 1.0), r - 3));
  return out;
}

}  // namespace cnoidal::elliptic
