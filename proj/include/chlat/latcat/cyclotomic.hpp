#pragma once

// Real cyclotomic fields Q(2 cos(pi/L)) and the Chebyshev-like basis used to
// express 2 cos(pi/m) for divisors m | L.

#include <chlat/exact/number_field.hpp>
#include <chlat/exact/qpoly.hpp>

namespace chlat::latcat {

// The n-th cyclotomic polynomial, computed exactly by the recursion
// Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x).
QPoly cyclotomic_polynomial(int n);

// W_k with W_0 = 2, W_1 = x, W_{k+1} = x W_k - W_{k-1}, so that
// W_k(z + 1/z) = z^k + z^{-k}; in particular W_k(2 cos t) = 2 cos(k t).
QPoly w_basis_poly(int k);

// Minimal polynomial of theta = 2 cos(pi/L) over Q (monic, integral).
QPoly real_cyclotomic_min_poly(int L);

// The totally real field Q(theta), theta = 2 cos(pi/L), with the identity
// conjugation and the designated embedding theta -> 2 cos(pi/L).
NumberFieldPtr real_cyclotomic_field(int L);

// 2 cos(pi/m) as an element of real_cyclotomic_field(L); requires m | L.
// m = 1 gives 2, m = 2 gives 0.
NFElem two_cos_pi_over(int m, int L, const NumberFieldPtr& field);

}  // namespace chlat::latcat
