#pragma once

// Exact arithmetic in a number field K = Q[x]/(f) equipped with
//   * a distinguished automorphism sigma of order <= 2 ("conjugation"),
//   * a designated complex embedding, certified by interval enclosures.
//
// Elements are polynomials in the generator of degree < deg f with rational
// coefficients. All ring operations are exact; the embedding is used only to
// decide signs (and is certified: a sign is reported only when an enclosure
// excludes zero, and equality is decided exactly first).

#include <chlat/exact/box.hpp>
#include <chlat/exact/qpoly.hpp>
#include <chlat/exact/rat.hpp>

#include <memory>
#include <string>
#include <vector>

namespace chlat {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
 public:
  // Default: the rational number 0, attached to no field. Field-free elements
  // act as rational constants and adopt the field of the other operand.
  NFElem() = default;
  explicit NFElem(const Rat& q);
  NFElem(NumberFieldPtr field, std::vector<Rat> coeffs);

  const NumberFieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  // Coefficient of gen^i (zero beyond stored length).
  const Rat& coeff(size_t i) const;

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rat as_rat() const;  // throws unless is_rational()
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  NFElem operator-() const;
  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator*(const Rat& s) const;
  NFElem operator/(const NFElem& o) const;  // exact; throws on zero divisor
  NFElem inverse() const;
  NFElem conj() const;  // the field's distinguished automorphism
  NFElem pow(long e) const;

  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  // Certified enclosure under the designated embedding, of width <= 2^-prec.
  QBox embed(unsigned prec = 30) const;

  std::string to_string() const;

 private:
  NumberFieldPtr field_;
  std::vector<Rat> c_;  // c_[i] multiplies gen^i; trailing zeros trimmed
  void trim();
  friend class NumberField;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  struct Spec {
    QPoly min_poly;         // monic irreducible integer polynomial
    QPoly conj_gen_image;   // sigma(gen) as a polynomial in gen (x = identity)
    double approx_re = 0;   // approximate designated root
    double approx_im = 0;
    std::string name = "K";
    std::string gen_name = "t";
  };

  // Validates the data (irreducibility, sigma is an automorphism of order
  // <= 2, the designated embedding intertwines sigma with complex
  // conjugation) and certifies enclosures for all complex roots.
  static NumberFieldPtr create(const Spec& spec);

  // Convenience: the rationals as a degree-1 field (gen = 0, sigma = id).
  static NumberFieldPtr rationals();

  int degree() const { return f_.degree(); }
  const QPoly& min_poly() const { return f_; }
  const QPoly& conj_gen_image() const { return conj_; }
  const std::string& name() const { return name_; }
  const std::string& gen_name() const { return gen_name_; }
  bool is_real() const;  // sigma = id and the designated root is real

  NFElem zero() const;
  NFElem one() const;
  NFElem gen() const;
  NFElem from_rat(const Rat& q) const;
  NFElem from_coeffs(std::vector<Rat> coeffs) const;

  // Designated-root enclosure of width <= 2^-prec (refining as needed).
  QBox designated_box(unsigned prec) const;
  // All root enclosures (pairwise disjoint), each of width <= 2^-prec.
  std::vector<QBox> root_boxes(unsigned prec) const;
  size_t designated_index() const { return designated_; }

 private:
  NumberField() = default;
  QPoly f_;
  QPoly conj_;
  std::string name_, gen_name_;
  size_t designated_ = 0;
  mutable std::vector<QBox> roots_;
  mutable std::vector<bool> root_is_real_;  // real roots carry exact zero im
  mutable unsigned prec_ = 0;  // all roots currently have width <= 2^-prec_
  void refine_to(unsigned prec) const;
};

// Exact sign (-1, 0, +1) of an element fixed by conjugation, evaluated in the
// designated embedding. Throws if sigma(a) != a (the value need not be real).
int sign_of_real(const NFElem& a);

// Monic minimal polynomial of a over Q (degree divides the field degree).
QPoly minimal_polynomial(const NFElem& a);

}  // namespace chlat
