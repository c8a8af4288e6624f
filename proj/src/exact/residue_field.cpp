#include <chlat/exact/residue_field.hpp>

#include <algorithm>
#include <stdexcept>

namespace chlat {

namespace {

uint64_t powmod_small(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

ResidueFieldPtr ResidueField::create(NumberFieldPtr field, uint64_t p, int factor_index) {
  if (!field) throw std::invalid_argument("ResidueField: null number field");
  std::shared_ptr<ResidueField> r(new ResidueField());
  r->field_ = field;
  r->p_ = p;

  FpPoly fbar = fp_from_int_poly(int_coeffs(field->min_poly()), p);
  if (fbar.degree() != field->degree())
    throw std::invalid_argument("ResidueField: minimal polynomial degenerates mod p");
  auto factors = fp_factor(fbar);
  std::vector<FpPoly> distinct;
  for (const auto& g : factors)
    if (distinct.empty() || !(distinct.back() == g)) distinct.push_back(g);
  if (factor_index < 0 || factor_index >= static_cast<int>(distinct.size()))
    throw std::invalid_argument("ResidueField: factor index out of range");
  r->g_ = distinct[static_cast<size_t>(factor_index)];

  // The conjugation must descend to an automorphism of GF(p^d), i.e. to some
  // power of Frobenius; locate it by matching the image of the generator.
  FpPoly conj_img = r->reduce(field->from_coeffs(field->conj_gen_image().coeffs()));
  const int d = r->g_.degree();
  int found = -1;
  FpPoly y = r->gen();
  for (int j = 0; j < d && found < 0; ++j) {
    Int e = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(j));
    if (fp_powmod(y, e, r->g_) == conj_img) found = j;
  }
  if (found < 0)
    throw std::invalid_argument(
        "ResidueField: conjugation does not descend to a Frobenius power");
  r->conj_pow_ = found;
  return r;
}

Int ResidueField::order() const {
  return pow_int(Int(static_cast<unsigned long>(p_)),
                 static_cast<unsigned long>(g_.degree()));
}

FpPoly ResidueField::from_int(const Int& n) const {
  Int m(static_cast<unsigned long>(p_));
  Int v = n % m;
  if (v < 0) v += m;
  return fp_constant(v.get_ui(), p_);
}

FpPoly ResidueField::reduce(const NFElem& a) const {
  Int m(static_cast<unsigned long>(p_));
  FpPoly acc = zero();
  FpPoly ypow = one();
  const FpPoly y = gen();
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rat& q = a.coeffs()[i];
    Int den = q.get_den() % m;
    if (den == 0)
      throw std::domain_error("ResidueField::reduce: prime divides a denominator");
    Int num = q.get_num() % m;
    if (num < 0) num += m;
    const uint64_t inv = powmod_small(den.get_ui(), p_ - 2, p_);
    const uint64_t coeff = (num.get_ui() * inv) % p_;
    if (coeff != 0) acc = add(acc, mul(fp_constant(coeff, p_), ypow));
    ypow = mul(ypow, y);
  }
  return acc;
}

FpPoly ResidueField::inv(const FpPoly& a) const {
  if (a.is_zero()) throw std::domain_error("ResidueField::inv: zero element");
  FpXgcd x = fp_xgcd(a, g_);
  if (x.g.degree() != 0) throw std::logic_error("ResidueField::inv: modulus not irreducible");
  return fp_mod(x.u, g_);
}

FpPoly ResidueField::pow(const FpPoly& a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  return fp_powmod(a, e, g_);
}

FpPoly ResidueField::conj(const FpPoly& a) const {
  if (conj_pow_ == 0) return fp_mod(a, g_);
  Int e = pow_int(Int(static_cast<unsigned long>(p_)),
                  static_cast<unsigned long>(conj_pow_));
  return fp_powmod(a, e, g_);
}

uint64_t ResidueField::encode(const FpPoly& a) const {
  const int d = g_.degree();
  if (d > 10) throw std::domain_error("ResidueField::encode: field too large to encode");
  uint64_t code = 0;
  for (int i = d; i-- > 0;)
    code = code * p_ + (i < static_cast<int>(a.c.size()) ? a.c[static_cast<size_t>(i)] : 0);
  return code;
}

FpPoly ResidueField::decode(uint64_t code) const {
  FpPoly a;
  a.p = p_;
  const int d = g_.degree();
  a.c.resize(static_cast<size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    a.c[static_cast<size_t>(i)] = code % p_;
    code /= p_;
  }
  a.normalize();
  return a;
}

}  // namespace chlat
