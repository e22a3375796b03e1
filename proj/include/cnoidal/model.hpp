#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnoidal/errors.hpp"

namespace cnoidal {

// The four coupled systems: a complex short-wave field u with KdV- or
// BBM-type dispersion, and a real long-wave field v with KdV- or BBM-type
// dispersion.
enum class SystemKind { kdv_kdv, bbm_bbm, kdv_bbm, bbm_kdv };

std::string to_string(SystemKind kind);
SystemKind system_from_string(std::string_view name);

// true when the u-equation (resp. v-equation) carries the mixed x.x.t
// derivative instead of the third x-derivative
constexpr bool u_dispersion_is_bbm(SystemKind k) {
  return k == SystemKind::bbm_bbm || k == SystemKind::bbm_kdv;
}
constexpr bool v_dispersion_is_bbm(SystemKind k) {
  return k == SystemKind::bbm_bbm || k == SystemKind::kdv_bbm;
}

// Model constants.  `a` plays a0 when the u-equation is KdV-dispersed and a1
// when it is BBM-dispersed.
struct PhysicalParams {
  double mu0 = 1.0;
  double mu1 = 1.0;
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;

  void validate() const;  // mu0, mu1, a, c > 0 (b unrestricted)
};

// Profile polynomials in cn: f = d0 + d1 cn + d2 cn^2, g likewise with h.
struct ProfileCoeffs {
  double d0 = 0, d1 = 0, d2 = 0;
  double h0 = 0, h1 = 0, h2 = 0;
};

// Traveling-wave parameters of u = e^{i w t} e^{i B (x - sigma t)} f(x - sigma t),
// v = g(x - sigma t), profiles evaluated at (lambda xi, m).
struct WaveParams {
  double B = 0;
  double omega = 0;
  double sigma = 1;
  double lambda = 1;
  double m = 0;
};

// The 13 polynomial coefficients k_{j,q} that must vanish on an exact
// solution: rows j = 1, 3 multiply sn*dn*cn^q (q = 0..3), row j = 2
// multiplies cn^q (q = 0..4).  `scale` keeps the largest |monomial| that
// contributed to each entry, so residual checks can be scale-free.
struct CoefficientSet {
  static constexpr int count = 13;
  std::array<double, count> value{};
  std::array<double, count> scale{};

  // flat index <-> (j, q)
  static std::pair<int, int> index(int i);
  static int flat(int j, int q);

  double at(int j, int q) const { return value[flat(j, q)]; }
  double scaled(int i) const;
  double max_scaled() const;
  int worst() const;  // flat index of the largest scaled entry
};

CoefficientSet coefficient_set(SystemKind kind, const PhysicalParams& phys,
                               const ProfileCoeffs& prof, const WaveParams& wave);

// Left-hand sides of the three associated ODEs at xi, with per-row scales
// (largest |term| in the row).
struct OdeResiduals {
  std::array<double, 3> value{};
  std::array<double, 3> scale{};
};

OdeResiduals ode_residuals(SystemKind kind, const PhysicalParams& phys,
                           const ProfileCoeffs& prof, const WaveParams& wave,
                           double xi);

// Finite-difference residuals of the two PDEs at (x, t), 4th-order central
// stencils; the samplers must be defined on x +- 3h, t +- 2h.
using ComplexField = std::function<std::complex<double>(double, double)>;
using RealField = std::function<double(double, double)>;

struct PdeResiduals {
  std::complex<double> u;
  double v;
  double scale_u;  // largest |term| in the u-equation
  double scale_v;
};

PdeResiduals pde_residuals(SystemKind kind, const PhysicalParams& phys,
                           const ComplexField& u, const RealField& v, double x,
                           double t, double h);

// Highest collected coefficient of ff' + gg' for a degree-n cn ansatz:
// k_{3,2n-1} = -n lambda (d_n^2 + h_n^2).  The degree-reduction argument
// requires n >= 3.
double leading_coefficient(int n, double lambda, double dn, double hn);

// Evaluation grid for field-level checks.
struct SampleGrid {
  std::vector<double> xi;
  std::vector<double> x;
  double t = 0;
};

}  // namespace cnoidal
