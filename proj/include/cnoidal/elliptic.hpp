#pragma once

#include "cnoidal/errors.hpp"

namespace cnoidal::elliptic {

// Jacobi elliptic kernel.  All functions take the MODULUS m (the k that
// appears as m^2 sin^2 t under the defining integral), never the parameter
// m^2.  Use the conversion helpers below when interfacing with conventions
// that pass the parameter.

inline double parameter_from_modulus(double m) { return m * m; }
double modulus_from_parameter(double parameter);

// sn, cn, dn at argument u.
struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// cn^r(lambda*xi, m) and its first three xi-derivatives.
struct CnPowerDerivs {
  double value;
  double d1;
  double d2;
  double d3;
};

// Complete elliptic integral of the first kind, K(m), by AGM iteration.
// Quarter period of sn/cn.  Requires 0 <= m < 1; K diverges at m = 1.
double complete_k(double m);

// Jacobi amplitude am(u, m).  Arguments are reduced modulo 4K(m) before the
// AGM/Landen recursion; am carries the full winding (am(u+4K) = am(u)+2*pi).
double jacobi_am(double u, double m);

// (sn, cn, dn)(u, m).  Dispatches to trigonometric functions at m = 0 and to
// hyperbolic ones at m = 1.
JacobiTriple jacobi_triple(double u, double m);

// cn^r and derivatives via the closed-form differentiation rules
//   (cn^r)'   = -r lam cn^{r-1} sn dn
//   (cn^r)''  = -r lam^2 [(r+1) m^2 cn^{r+2} + r(1-2m^2) cn^r
//                         + (r-1)(m^2-1) cn^{r-2}]
//   (cn^r)''' =  r lam^3 sn dn [(r+1)(r+2) m^2 cn^{r+1} + r^2(1-2m^2) cn^{r-1}
//                               + (r-1)(r-2)(m^2-1) cn^{r-3}]
// evaluated at (lambda*xi, m).  r must be >= 0.
CnPowerDerivs cn_power_derivs(int r, double lambda, double xi, double m);

}  // namespace cnoidal::elliptic
