#pragma once

// Reduction of a number field modulo a prime: GF(p^d) = GF(p)[y]/(g) for an
// irreducible factor g of the minimal polynomial mod p. Elements are FpPoly
// residues of degree < d. The field's conjugation descends to a Frobenius
// power, which is located and verified at construction.

#include <chlat/exact/number_field.hpp>
#include <chlat/exact/zfactor.hpp>

#include <cstdint>
#include <memory>

namespace chlat {

class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

class ResidueField {
 public:
  // factor_index selects among the distinct irreducible factors of
  // min_poly mod p in their deterministic (degree, then lex) order.
  static ResidueFieldPtr create(NumberFieldPtr field, uint64_t p, int factor_index = 0);

  const NumberFieldPtr& number_field() const { return field_; }
  uint64_t p() const { return p_; }
  int ext_degree() const { return g_.degree(); }
  Int order() const;                      // p^d
  const FpPoly& modulus() const { return g_; }
  int conj_frobenius_power() const { return conj_pow_; }

  FpPoly zero() const { return fp_constant(0, p_); }
  FpPoly one() const { return fp_constant(1, p_); }
  FpPoly gen() const { return fp_mod(fp_x_power(1, p_), g_); }
  FpPoly from_int(const Int& n) const;

  // Image of a number-field element; throws if p divides a denominator.
  FpPoly reduce(const NFElem& a) const;

  FpPoly add(const FpPoly& a, const FpPoly& b) const { return fp_add(a, b); }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const { return fp_sub(a, b); }
  FpPoly neg(const FpPoly& a) const { return fp_sub(zero(), a); }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return fp_mod(fp_mul(a, b), g_); }
  FpPoly inv(const FpPoly& a) const;
  FpPoly pow(const FpPoly& a, const Int& e) const;
  FpPoly conj(const FpPoly& a) const;  // Frobenius^conj_pow_

  // Dense encoding of elements as integers in [0, p^d), base-p digits.
  uint64_t encode(const FpPoly& a) const;
  FpPoly decode(uint64_t code) const;

 private:
  ResidueField() = default;
  NumberFieldPtr field_;
  uint64_t p_ = 0;
  FpPoly g_;
  int conj_pow_ = 0;
};

}  // namespace chlat
