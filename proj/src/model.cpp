#include "cnoidal/model.hpp"

#include <cmath>

#include "cnoidal/elliptic.hpp"

namespace cnoidal {

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::kdv_kdv: return "kdv-kdv";
    case SystemKind::bbm_bbm: return "bbm-bbm";
    case SystemKind::kdv_bbm: return "kdv-bbm";
    case SystemKind::bbm_kdv: return "bbm-kdv";
  }
  throw DomainError("unknown SystemKind");
}

SystemKind system_from_string(std::string_view name) {
  std::string s(name);
  for (auto& ch : s) {
    if (ch == '_') ch = '-';
  }
  if (s == "kdv-kdv") return SystemKind::kdv_kdv;
  if (s == "bbm-bbm") return SystemKind::bbm_bbm;
  if (s == "kdv-bbm") return SystemKind::kdv_bbm;
  if (s == "bbm-kdv") return SystemKind::bbm_kdv;
  throw DomainError("unknown system '" + s +
                    "' (expected kdv-kdv, bbm-bbm, kdv-bbm or bbm-kdv)");
}

void PhysicalParams::validate() const {
  if (!(mu0 > 0)) throw DomainError("mu0 must be > 0");
  if (!(mu1 > 0)) throw DomainError("mu1 must be > 0");
  if (!(a > 0)) throw DomainError("a must be > 0");
  if (!(c > 0)) throw DomainError("c must be > 0");
}

namespace {

struct Acc3 {
  double sum = 0, scale = 0;
  Acc3& operator<<(double t) {
    sum += t;
    scale = std::max(scale, std::abs(t));
    return *this;
  }
};

struct ProfileDerivs {
  double f, f1, f2, f3;
  double g, g1, g2, g3;
};

ProfileDerivs profile_derivs(const ProfileCoeffs& p, const WaveParams& w, double xi) {
  using elliptic::cn_power_derivs;
  auto c1 = cn_power_derivs(1, w.lambda, xi, w.m);
  auto c2 = cn_power_derivs(2, w.lambda, xi, w.m);
  ProfileDerivs d;
  d.f = p.d0 + p.d1 * c1.value + p.d2 * c2.value;
  d.f1 = p.d1 * c1.d1 + p.d2 * c2.d1;
  d.f2 = p.d1 * c1.d2 + p.d2 * c2.d2;
  d.f3 = p.d1 * c1.d3 + p.d2 * c2.d3;
  d.g = p.h0 + p.h1 * c1.value + p.h2 * c2.value;
  d.g1 = p.h1 * c1.d1 + p.h2 * c2.d1;
  d.g2 = p.h1 * c1.d2 + p.h2 * c2.d2;
  d.g3 = p.h1 * c1.d3 + p.h2 * c2.d3;
  return d;
}

}  // namespace

OdeResiduals ode_residuals(SystemKind kind, const PhysicalParams& phys,
                           const ProfileCoeffs& prof, const WaveParams& wave,
                           double xi) {
  const auto pd = profile_derivs(prof, wave, xi);
  const double a = phys.a, b = phys.b, c = phys.c;
  const double mu0 = phys.mu0, mu1 = phys.mu1;
  const double B = wave.B, w = wave.omega, sig = wave.sigma;

  Acc3 r1, r2, r3;
  if (!u_dispersion_is_bbm(kind)) {
    r1 << pd.f1 * pd.g << pd.f * pd.g1 << a * pd.f3
       << (mu0 - sig - 3 * a * B * B - 2 * b * B) * pd.f1;
    r2 << (B + mu1) * pd.f * pd.g << (3 * a * B + b) * pd.f2
       << (w + B * mu0 - B * sig - a * B * B * B - b * B * B) * pd.f;
  } else {
    r1 << pd.f1 * pd.g << pd.f * pd.g1 << a * sig * pd.f3
       << (mu0 + 2 * a * B * w - 3 * a * B * B * sig - sig - 2 * b * B) * pd.f1;
    r2 << (B + mu1) * pd.f * pd.g << (3 * a * B * sig + b - a * w) * pd.f2
       << (w + B * mu0 + a * B * B * w - a * B * B * B * sig - B * sig - b * B * B) * pd.f;
  }
  const double cc = v_dispersion_is_bbm(kind) ? c * sig : c;
  r3 << pd.f * pd.f1 << pd.g * pd.g1 << cc * pd.g3 << (1 - sig) * pd.g1;

  OdeResiduals out;
  out.value = {r1.sum, r2.sum, r3.sum};
  out.scale = {r1.scale, r2.scale, r3.scale};
  return out;
}

namespace {

template <typename T, typename F>
T dx1(const F& f, double x, double t, double h) {
  return (-f(x + 2 * h, t) + 8.0 * f(x + h, t) - 8.0 * f(x - h, t) + f(x - 2 * h, t)) /
         (12 * h);
}

template <typename T, typename F>
T dx2(const F& f, double x, double t, double h) {
  return (-f(x + 2 * h, t) + 16.0 * f(x + h, t) - 30.0 * f(x, t) +
          16.0 * f(x - h, t) - f(x - 2 * h, t)) /
         (12 * h * h);
}

template <typename T, typename F>
T dx3(const F& f, double x, double t, double h) {
  return (f(x - 3 * h, t) - 8.0 * f(x - 2 * h, t) + 13.0 * f(x - h, t) -
          13.0 * f(x + h, t) + 8.0 * f(x + 2 * h, t) - f(x + 3 * h, t)) /
         (8 * h * h * h);
}

template <typename T, typename F>
T dt1(const F& f, double x, double t, double h) {
  return (-f(x, t + 2 * h) + 8.0 * f(x, t + h) - 8.0 * f(x, t - h) + f(x, t - 2 * h)) /
         (12 * h);
}

// d^3/dx^2 dt by composing the x- and t-stencils
template <typename T, typename F>
T dxxt(const F& f, double x, double t, double h) {
  auto ft = [&](double xx, double tt) { return dt1<T>(f, xx, tt, h); };
  return dx2<T>(ft, x, t, h);
}

}  // namespace

PdeResiduals pde_residuals(SystemKind kind, const PhysicalParams& phys,
                           const ComplexField& u, const RealField& v, double x,
                           double t, double h) {
  if (!(h > 0)) throw StencilError("pde_residuals: step h must be > 0");
  using C = std::complex<double>;
  const C i_unit(0.0, 1.0);

  auto uv = [&](double xx, double tt) { return u(xx, tt) * v(xx, tt); };
  auto usq = [&](double xx, double tt) { return std::norm(u(xx, tt)); };

  PdeResiduals out{};
  {
    C terms[5];
    terms[0] = dt1<C>(u, x, t, h);
    terms[1] = phys.mu0 * dx1<C>(u, x, t, h);
    terms[2] = u_dispersion_is_bbm(kind) ? -phys.a * dxxt<C>(u, x, t, h)
                                         : phys.a * dx3<C>(u, x, t, h);
    terms[3] = i_unit * phys.b * dx2<C>(u, x, t, h);
    terms[4] = dx1<C>(uv, x, t, h) + i_unit * phys.mu1 * uv(x, t);
    C sum = 0;
    double scale = 0;
    for (const C& term : terms) {
      sum += term;
      scale = std::max(scale, std::abs(term));
    }
    out.u = sum;
    out.scale_u = scale;
  }
  {
    double terms[5];
    terms[0] = dt1<double>(v, x, t, h);
    terms[1] = dx1<double>(v, x, t, h);
    terms[2] = v(x, t) * dx1<double>(v, x, t, h);
    terms[3] = v_dispersion_is_bbm(kind) ? -phys.c * dxxt<double>(v, x, t, h)
                                         : phys.c * dx3<double>(v, x, t, h);
    terms[4] = 0.5 * dx1<double>(usq, x, t, h);
    double sum = 0, scale = 0;
    for (double term : terms) {
      sum += term;
      scale = std::max(scale, std::abs(term));
    }
    out.v = sum;
    out.scale_v = scale;
  }
  return out;
}

double leading_coefficient(int n, double lambda, double dn, double hn) {
  if (n < 3) throw DomainError("leading_coefficient: degree n must be >= 3");
  return -n * lambda * (dn * dn + hn * hn);
}

}  // namespace cnoidal
