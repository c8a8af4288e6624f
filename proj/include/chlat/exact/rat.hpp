#pragma once

// Exact integer / rational scalars. GMP supplies the arbitrary-precision
// arithmetic; everything in this project that makes a mathematical decision
// (sign, equality, divisibility) does so through these exact types.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chlat {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Safe two-argument rational constructor: mpq_class(n, d) does NOT reduce to
// lowest terms, and comparisons require canonical form. Always build via this.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q as an Int; throws if q is not an integer.
inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::runtime_error("to_int: not an integer: " + q.get_str());
  return q.get_num();
}

// Exact long value; throws on overflow or non-integers.
inline long to_long(const Rat& q) {
  Int n = to_int(q);
  if (!n.fits_slong_p()) throw std::runtime_error("to_long: out of range");
  return n.get_si();
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

// Floor of log2(|n|) + 1, i.e. bit length; 0 for n = 0.
inline size_t bit_length(const Int& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace chlat
