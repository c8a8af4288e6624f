#pragma once

// Complex interval arithmetic with exact rational endpoints.
//
// QInterval is a closed interval [lo, hi] subset of R; QBox is a rectangle
// re x im in C. All operations return enclosures: the true value of the
// operation applied to any members of the inputs lies in the output. This is
// the certification layer under numeric embeddings of number fields -- sign
// decisions are made only when an enclosure excludes zero.

#include <chlat/exact/qpoly.hpp>
#include <chlat/exact/rat.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace chlat {

struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("QInterval: lo > hi");
  }
  static QInterval point(const Rat& q) { return QInterval(q, q); }

  bool contains(const Rat& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool subset_of(const QInterval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool strict_subset_of(const QInterval& o) const { return o.lo < lo && hi < o.hi; }
  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }

  QInterval operator-() const { return QInterval(-hi, -lo); }
  QInterval operator+(const QInterval& o) const { return QInterval(lo + o.lo, hi + o.hi); }
  QInterval operator-(const QInterval& o) const { return QInterval(lo - o.hi, hi - o.lo); }
  QInterval operator*(const QInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return QInterval(std::min(std::min(a, b), std::min(c, d)),
                     std::max(std::max(a, b), std::max(c, d)));
  }
  QInterval operator*(const Rat& s) const {
    return s >= 0 ? QInterval(lo * s, hi * s) : QInterval(hi * s, lo * s);
  }
  QInterval operator+(const Rat& s) const { return QInterval(lo + s, hi + s); }

  // Tight enclosure of {x^2 : x in this} (never dips below 0).
  QInterval square() const {
    Rat a = lo * lo, b = hi * hi;
    if (contains_zero()) return QInterval(Rat(0), std::max(a, b));
    return QInterval(std::min(a, b), std::max(a, b));
  }

  QInterval recip() const {
    if (contains_zero()) throw std::domain_error("QInterval::recip: interval contains zero");
    return QInterval(1 / hi, 1 / lo);
  }
  QInterval operator/(const QInterval& o) const { return *this * o.recip(); }

  std::string to_string() const {
    return "[" + chlat::to_string(lo) + ", " + chlat::to_string(hi) + "]";
  }
};

// Round endpoints outward to denominator 2^k. Keeps denominators bounded
// across iterated arithmetic while preserving the enclosure property.
inline QInterval round_out(const QInterval& x, unsigned k) {
  Int scale = Int(1) << k;
  Rat lo = x.lo * scale, hi = x.hi * scale;
  Int lof, hic;
  mpz_fdiv_q(lof.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  mpz_cdiv_q(hic.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
  return QInterval(Rat(lof) / scale, Rat(hic) / scale);
}

struct QBox {
  QInterval re, im;

  QBox() = default;
  QBox(QInterval r, QInterval i) : re(std::move(r)), im(std::move(i)) {}
  static QBox point(const Rat& r, const Rat& i) {
    return QBox(QInterval::point(r), QInterval::point(i));
  }

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool subset_of(const QBox& o) const { return re.subset_of(o.re) && im.subset_of(o.im); }
  bool strict_subset_of(const QBox& o) const {
    return re.strict_subset_of(o.re) && im.strict_subset_of(o.im);
  }
  std::pair<Rat, Rat> mid() const { return {re.mid(), im.mid()}; }
  Rat width() const { return std::max(re.width(), im.width()); }

  QBox conj() const { return QBox(re, -im); }
  QBox operator-() const { return QBox(-re, -im); }
  QBox operator+(const QBox& o) const { return QBox(re + o.re, im + o.im); }
  QBox operator-(const QBox& o) const { return QBox(re - o.re, im - o.im); }
  QBox operator*(const QBox& o) const {
    return QBox(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  QBox operator*(const Rat& s) const { return QBox(re * s, im * s); }

  // Enclosure of |z|^2.
  QInterval norm_sq() const { return re.square() + im.square(); }

  // z / w = z * conj(w) / |w|^2; requires the |w|^2 enclosure to exclude zero.
  QBox operator/(const QBox& o) const {
    QInterval n = o.norm_sq();
    if (n.contains_zero()) throw std::domain_error("QBox division: denominator box meets zero");
    QInterval r = n.recip();
    QBox num = *this * o.conj();
    return QBox(num.re * r, num.im * r);
  }

  std::string to_string() const { return re.to_string() + " + i*" + im.to_string(); }
};

inline QBox round_out(const QBox& x, unsigned k) {
  return QBox(round_out(x.re, k), round_out(x.im, k));
}

inline bool intersects(const QInterval& a, const QInterval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}
inline bool intersects(const QBox& a, const QBox& b) {
  return intersects(a.re, b.re) && intersects(a.im, b.im);
}

// Intersection; throws if empty.
inline QInterval intersect(const QInterval& a, const QInterval& b) {
  if (!intersects(a, b)) throw std::domain_error("intersect: empty interval intersection");
  return QInterval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}
inline QBox intersect(const QBox& a, const QBox& b) {
  return QBox(intersect(a.re, b.re), intersect(a.im, b.im));
}

// Horner evaluation of a rational polynomial over a box / an interval.
inline QBox eval_box(const QPoly& f, const QBox& x) {
  QBox acc;  // zero
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + QBox::point(f.coeff(i), Rat(0));
  return acc;
}

inline QInterval eval_interval(const QPoly& f, const QInterval& x) {
  QInterval acc;  // zero
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i);
  return acc;
}

}  // namespace chlat
