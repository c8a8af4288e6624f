#pragma once

// Dense univariate polynomials with exact rational coefficients.
// Coefficient 0 is the constant term; the zero polynomial has degree -1.

#include <chlat/exact/rat.hpp>

#include <string>
#include <vector>

namespace chlat {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rat& constant);
  explicit QPoly(std::vector<Rat> coeffs);

  static QPoly x_power(int k, const Rat& scale = Rat(1));
  static QPoly from_int_coeffs(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool has_integer_coeffs() const;

  // Coefficient of x^i; zero beyond the degree.
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  // Euclidean division: *this = q * d + r with deg r < deg d. Throws on d = 0.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly mod(const QPoly& d) const { return divmod(d).second; }

  QPoly derivative() const;
  QPoly make_monic() const;
  Rat eval(const Rat& x) const;

  // Evaluate by Horner's rule in any ring with +, * and a Rat-scaling ctor hook.
  template <typename T>
  T eval_in(const T& x, const T& one) const {
    T acc = one * Rat(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + one * c_[size_t(i)];
    return acc;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rat> c_;
  void trim();
};

// Monic gcd of a and b (zero if both zero).
QPoly poly_gcd(QPoly a, QPoly b);

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
struct PolyXgcd {
  QPoly g, u, v;
};
PolyXgcd poly_xgcd(const QPoly& a, const QPoly& b);

}  // namespace chlat
