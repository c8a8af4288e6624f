#pragma once

// Integer-polynomial factorization utilities:
//   * polynomials over GF(p) (small p) with gcd / powmod / Berlekamp splitting,
//   * quadratic Hensel lifting,
//   * Zassenhaus factorization over Z for monic squarefree input,
//   * cyclotomic polynomials.
// These back number-field construction checks and residue-field construction.

#include <chlat/exact/qpoly.hpp>
#include <chlat/exact/rat.hpp>

#include <cstdint>
#include <vector>

namespace chlat {

// Dense polynomial over GF(p), p < 2^31, coefficients reduced to [0, p).
struct FpPoly {
  uint64_t p = 0;
  std::vector<uint64_t> c;  // c[0] = constant term; normalized (no leading zeros)

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize();
  bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
};

FpPoly fp_from_int_poly(const std::vector<Int>& coeffs, uint64_t p);
FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m);
FpPoly fp_gcd(FpPoly a, FpPoly b);   // monic
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m);
FpPoly fp_constant(uint64_t v, uint64_t p);
FpPoly fp_x_power(int k, uint64_t p);

// Extended Euclid: monic g = gcd(a, b) with u a + v b = g.
struct FpXgcd {
  FpPoly g, u, v;
};
FpXgcd fp_xgcd(FpPoly a, FpPoly b);

// All monic irreducible factors of monic squarefree a over GF(p) (Berlekamp).
// Deterministic: factors sorted by degree, then lexicographically by coefficients.
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& a);

// Irreducible factors with multiplicity of arbitrary nonzero a over GF(p)
// (squarefree decomposition first, including p-th power collapse). Sorted.
std::vector<FpPoly> fp_factor(const FpPoly& a);

// Monic integer polynomial helpers. Input coefficient vectors are c[0] = const.
std::vector<Int> int_coeffs(const QPoly& f);  // throws unless integer coefficients

// Is the monic integer polynomial f irreducible over Q? Requires deg >= 1.
// If reducible and witness != nullptr, *witness receives a proper monic factor.
bool z_irreducible(const QPoly& f, QPoly* witness = nullptr);

// Full factorization of a monic squarefree integer polynomial into monic
// irreducible integer factors, sorted deterministically.
std::vector<QPoly> z_factor_squarefree(const QPoly& f);

// Cyclotomic polynomial Phi_n (exact, memoized).
QPoly cyclotomic(unsigned n);

}  // namespace chlat
