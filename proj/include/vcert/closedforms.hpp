#ifndef VCERT_CLOSEDFORMS_HPP
#define VCERT_CLOSEDFORMS_HPP

#include "vcert/clin.hpp"
#include "vcert/poly.hpp"

namespace vcert::closed_forms {

// Reference closed forms for the instance-coefficient families at
// (n, p, q) = (13-2k, 3+2k, 2), as functions of the even instance
// parameter m >= 14. These are the published tables the certificate
// reproduces; every evaluator is exact.

// Full closed forms for the k = 0 route coefficients with no c-part.
Rat alpha0(long m);
Rat gamma0_prime(long m);

// c-coefficients of beta_0 and delta_0'; their c-free parts are not
// tabulated here (beta's c-free part equals the engine value, and is pinned
// by the zeta_0 table instead).
Rat beta0_c1(long m);

// xi_k(m) and zeta_k(m) = zeta0 + zeta1*c, k = 0, 1, 2.
Rat xi_closed(int k, long m);
CLin zeta_closed(int k, long m);

// The same families as exact polynomials in m.
PolyM xi_poly(int k);
CLinPolyM zeta_poly(int k);

// Common degree-10 factor of the pairwise determinant resultants.
PolyM f_poly();

// binom(m+14, 17) and binom(m+14, 16) as polynomials in m.
PolyM binom_m14_17_poly();
PolyM binom_m14_16_poly();

} // namespace vcert::closed_forms

#endif
