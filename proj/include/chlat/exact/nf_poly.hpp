#pragma once

// Dense univariate polynomials over a number field, just deep enough for
// characteristic polynomials and repeated-root extraction: arithmetic,
// division, gcd, derivative, evaluation.

#include <chlat/exact/number_field.hpp>

#include <optional>
#include <vector>

namespace chlat {

// Coefficient list, p[i] multiplying x^i, trailing zeros trimmed.
using NFPoly = std::vector<NFElem>;

int nfp_degree(const NFPoly& p);  // -1 for the zero polynomial
NFPoly nfp_trim(NFPoly p);
NFPoly nfp_add(const NFPoly& a, const NFPoly& b);
NFPoly nfp_sub(const NFPoly& a, const NFPoly& b);
NFPoly nfp_mul(const NFPoly& a, const NFPoly& b);
NFPoly nfp_scale(const NFPoly& a, const NFElem& s);
// Quotient and remainder; the divisor's leading coefficient is inverted
// exactly (throws on division by the zero polynomial).
std::pair<NFPoly, NFPoly> nfp_divmod(const NFPoly& a, const NFPoly& b);
NFPoly nfp_derivative(const NFPoly& a);
// Monic greatest common divisor by the Euclidean algorithm.
NFPoly nfp_gcd(NFPoly a, NFPoly b);
NFElem nfp_eval(const NFPoly& a, const NFElem& x);

// The unique repeated root when the squarefree defect is a power of one
// linear factor: gcd(p, p') reduced to degree one by further gcds. Returns
// nothing when p is squarefree or the defect is not a single root.
std::optional<NFElem> nfp_repeated_root(const NFPoly& p);

}  // namespace chlat
