#include <chlat/exact/qpoly.hpp>

#include <sstream>
#include <stdexcept>

namespace chlat {

QPoly::QPoly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::x_power(int k, const Rat& scale) {
  if (k < 0) throw std::invalid_argument("x_power: negative exponent");
  if (scale == 0) return {};
  std::vector<Rat> c(size_t(k) + 1, Rat(0));
  c.back() = scale;
  return QPoly(std::move(c));
}

QPoly QPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::has_integer_coeffs() const {
  for (const Rat& q : c_)
    if (!is_integer(q)) return false;
  return true;
}

const Rat& QPoly::coeff(int i) const {
  static const Rat zero(0);
  if (i < 0 || size_t(i) >= c_.size()) return zero;
  return c_[size_t(i)];
}

const Rat& QPoly::leading() const {
  if (c_.empty()) throw std::runtime_error("leading() of zero polynomial");
  return c_.back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (Rat& q : r.c_) q = -q;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const Rat& s) const {
  if (s == 0) return {};
  QPoly r = *this;
  for (Rat& q : r.c_) q *= s;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::runtime_error("polynomial division by zero");
  QPoly r = *this;
  std::vector<Rat> q(degree() >= d.degree() ? size_t(degree() - d.degree() + 1) : 0, Rat(0));
  const Rat& lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rat f = r.leading() / lead;
    q[size_t(shift)] = f;
    // r -= f * x^shift * d
    for (int i = 0; i <= d.degree(); ++i) r.c_[size_t(i + shift)] -= f * d.c_[size_t(i)];
    r.trim();
  }
  return {QPoly(std::move(q)), r};
}

QPoly QPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(long(i));
  return QPoly(std::move(c));
}

QPoly QPoly::make_monic() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / leading());
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[size_t(i)];
  return acc;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& q = c_[size_t(i)];
    if (q == 0) continue;
    Rat a = q > 0 ? q : Rat(-q);
    if (first) {
      if (q < 0) os << "-";
      first = false;
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    bool unit = (a == 1 && i > 0);
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

PolyXgcd poly_xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly u0(Rat(1)), u1, v0, v1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rat s = Rat(1) / r0.leading();
  return {r0 * s, u0 * s, v0 * s};
}

}  // namespace chlat
