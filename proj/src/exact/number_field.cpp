#include <chlat/exact/number_field.hpp>
#include <chlat/exact/zfactor.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace chlat {

namespace {

QPoly poly_of(const std::vector<Rat>& c) { return QPoly(c); }

// a(b) mod f, by Horner in Q[x]/(f).
QPoly compose_mod(const QPoly& a, const QPoly& b, const QPoly& f) {
  QPoly acc;
  for (int i = a.degree(); i >= 0; --i) acc = ((acc * b) + QPoly(a.coeff(i))).mod(f);
  return acc;
}

NumberFieldPtr unify_fields(const NFElem& a, const NFElem& b) {
  if (a.field() && b.field()) {
    if (a.field() != b.field())
      throw std::invalid_argument("NFElem: operands belong to different fields");
    return a.field();
  }
  return a.field() ? a.field() : b.field();
}

// ---------- certified root isolation ----------

struct RootCert {
  QBox box;
  bool real = false;
};

// One interval-Newton contraction step. Requires f'(X) to exclude zero.
QBox newton_step_complex(const QPoly& f, const QPoly& fd, const QBox& X, unsigned prec) {
  auto m = X.mid();
  QBox mb = QBox::point(m.first, m.second);
  QBox fm = eval_box(f, mb);
  QBox N = mb - fm / eval_box(fd, X);
  return round_out(intersect(N, X), prec);
}

QInterval newton_step_real(const QPoly& f, const QPoly& fd, const QInterval& X, unsigned prec) {
  Rat m = X.mid();
  QInterval fp = eval_interval(fd, X);
  if (fp.contains_zero())
    throw std::domain_error("newton_step_real: derivative interval meets zero");
  QInterval N = QInterval::point(m) - QInterval::point(f.eval(m)) / fp;
  return round_out(intersect(N, X), prec);
}

void refine_root(const QPoly& f, const QPoly& fd, QBox& box, bool real, unsigned prec) {
  Rat target = Rat(1) / (Int(1) << prec);
  for (int it = 0; it < 2000; ++it) {
    if (box.width() <= target) return;
    if (real)
      box = QBox(newton_step_real(f, fd, box.re, prec + 4), QInterval::point(Rat(0)));
    else
      box = newton_step_complex(f, fd, box, prec + 4);
  }
  throw std::runtime_error("refine_root: failed to reach requested width");
}

// Durand-Kerner in double precision: simultaneous approximation of all roots.
std::vector<std::complex<double>> durand_kerner(const QPoly& f) {
  const int n = f.degree();
  std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) a[static_cast<size_t>(i)] = f.coeff(i).get_d();
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[static_cast<size_t>(i)]));
  radius = 1.0 + radius / std::abs(a[static_cast<size_t>(n)]);
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    w *= seed;
    z[static_cast<size_t>(i)] = radius * w;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + a[static_cast<size_t>(i)];
    return acc;
  };
  for (int round = 0; round < 2000; ++round) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = a[static_cast<size_t>(n)];
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      if (std::abs(denom) == 0.0) {
        z[static_cast<size_t>(i)] += std::complex<double>(1e-8, 1e-8);
        moved = 1;
        continue;
      }
      std::complex<double> delta = eval(z[static_cast<size_t>(i)]) / denom;
      z[static_cast<size_t>(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

std::vector<RootCert> isolate_roots(const QPoly& f) {
  const int n = f.degree();
  const QPoly fd = f.derivative();
  std::vector<RootCert> out;
  if (n == 1) {
    Rat root = -f.coeff(0) / f.coeff(1);
    out.push_back({QBox::point(root, Rat(0)), true});
    return out;
  }
  auto approx = durand_kerner(f);
  for (const auto& zi : approx) {
    if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag()))
      throw std::runtime_error("root isolation: non-finite approximation");
    bool done = false;
    // Try certification radii from tight to loose; prefer a real enclosure
    // when the approximation sits on the real axis.
    for (int k = 40; k >= 8 && !done; k -= 7) {
      Rat r = Rat(1) / (Int(1) << k);
      if (std::abs(zi.imag()) < 1e-8) {
        try {
          Rat x0(zi.real());
          QInterval X(x0 - r, x0 + r);
          QInterval N = newton_step_real(f, fd, X, static_cast<unsigned>(k) + 8);
          if (N.strict_subset_of(X)) {
            out.push_back({QBox(N, QInterval::point(Rat(0))), true});
            done = true;
            continue;
          }
        } catch (const std::domain_error&) {
        }
      }
      try {
        Rat x0(zi.real()), y0(zi.imag());
        QBox X(QInterval(x0 - r, x0 + r), QInterval(y0 - r, y0 + r));
        QBox N = newton_step_complex(f, fd, X, static_cast<unsigned>(k) + 8);
        if (N.strict_subset_of(X)) {
          out.push_back({N, false});
          done = true;
        }
      } catch (const std::domain_error&) {
      }
    }
    if (!done)
      throw std::runtime_error("root isolation: interval Newton certification failed");
  }
  // Separate the enclosures (exact roots are distinct, so refinement works).
  unsigned prec = 34;
  for (int attempt = 0; attempt < 60; ++attempt) {
    bool overlap = false;
    for (size_t i = 0; i < out.size() && !overlap; ++i)
      for (size_t j = i + 1; j < out.size() && !overlap; ++j)
        if (intersects(out[i].box, out[j].box)) overlap = true;
    if (!overlap) break;
    for (auto& rc : out) refine_root(f, fd, rc.box, rc.real, prec);
    prec += 8;
    if (attempt == 59)
      throw std::runtime_error("root isolation: could not separate enclosures");
  }
  std::sort(out.begin(), out.end(), [](const RootCert& a, const RootCert& b) {
    Rat ar = a.box.re.mid(), br = b.box.re.mid();
    if (ar != br) return ar < br;
    return a.box.im.mid() < b.box.im.mid();
  });
  return out;
}

}  // namespace

// ---------- NFElem ----------

NFElem::NFElem(const Rat& q) {
  if (q != 0) c_.push_back(q);
}

NFElem::NFElem(NumberFieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (field_) {
    QPoly reduced = poly_of(c_).mod(field_->min_poly());
    c_ = reduced.coeffs();
  }
  trim();
}

void NFElem::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& NFElem::coeff(size_t i) const {
  static const Rat zero(0);
  return i < c_.size() ? c_[i] : zero;
}

Rat NFElem::as_rat() const {
  if (!is_rational()) throw std::domain_error("NFElem::as_rat: element is irrational");
  return c_.empty() ? Rat(0) : c_[0];
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

NFElem NFElem::operator+(const NFElem& o) const {
  NumberFieldPtr fld = unify_fields(*this, o);
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return NFElem(fld, std::move(c));
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator*(const NFElem& o) const {
  NumberFieldPtr fld = unify_fields(*this, o);
  QPoly prod = poly_of(c_) * poly_of(o.c_);
  if (fld) prod = prod.mod(fld->min_poly());
  return NFElem(fld, prod.coeffs());
}

NFElem NFElem::operator*(const Rat& s) const {
  NFElem r = *this;
  if (s == 0) return NFElem(r.field_, {});
  for (auto& v : r.c_) v *= s;
  return r;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("NFElem::inverse: zero element");
  if (!field_ || is_rational()) {
    NFElem r(Rat(1) / c_[0]);
    r.field_ = field_;
    return r;
  }
  PolyXgcd x = poly_xgcd(poly_of(c_), field_->min_poly());
  if (x.g.degree() != 0)
    throw std::logic_error("NFElem::inverse: gcd with the minimal polynomial is non-constant");
  QPoly u = (x.u * (Rat(1) / x.g.coeff(0))).mod(field_->min_poly());
  return NFElem(field_, u.coeffs());
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

NFElem NFElem::conj() const {
  if (!field_ || is_rational()) return *this;
  QPoly img = compose_mod(poly_of(c_), field_->conj_gen_image(), field_->min_poly());
  return NFElem(field_, img.coeffs());
}

NFElem NFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElem acc(Rat(1));
  acc.field_ = field_;
  NFElem base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

bool NFElem::operator==(const NFElem& o) const {
  if (field_ && o.field_ && field_ != o.field_)
    throw std::invalid_argument("NFElem: comparing elements of different fields");
  return c_ == o.c_;
}

QBox NFElem::embed(unsigned prec) const {
  if (!field_ || is_rational()) return QBox::point(c_.empty() ? Rat(0) : c_[0], Rat(0));
  Rat target = Rat(1) / (Int(1) << prec);
  QPoly a = poly_of(c_);
  for (unsigned p = prec; p <= prec + 2048; p += 32) {
    QBox b = eval_box(a, field_->designated_box(p));
    if (b.width() <= target) return b;
  }
  throw std::runtime_error("NFElem::embed: failed to reach requested width");
}

std::string NFElem::to_string() const {
  if (c_.empty()) return "0";
  return poly_of(c_).to_string(field_ ? field_->gen_name() : "t");
}

// ---------- NumberField ----------

NumberFieldPtr NumberField::create(const Spec& spec) {
  const QPoly& f = spec.min_poly;
  if (f.degree() < 1 || !f.is_monic() || !f.has_integer_coeffs())
    throw std::invalid_argument("NumberField: minimal polynomial must be monic integral");
  if (!z_irreducible(f))
    throw std::invalid_argument("NumberField: minimal polynomial is reducible: " +
                                f.to_string());

  std::shared_ptr<NumberField> k(new NumberField());
  k->f_ = f;
  k->conj_ = spec.conj_gen_image.mod(f);
  k->name_ = spec.name;
  k->gen_name_ = spec.gen_name;

  // sigma must fix f (map roots to roots) and square to the identity.
  const QPoly x = QPoly::x_power(1);
  if (!(compose_mod(f, k->conj_, f) == QPoly()))
    throw std::invalid_argument("NumberField: conjugation image is not a root of f");
  if (!(compose_mod(k->conj_, k->conj_, f) == x.mod(f)))
    throw std::invalid_argument("NumberField: conjugation is not an involution");

  auto certs = isolate_roots(f);
  if (static_cast<int>(certs.size()) != f.degree())
    throw std::logic_error("NumberField: wrong number of certified roots");
  k->roots_.reserve(certs.size());
  for (auto& rc : certs) {
    k->roots_.push_back(rc.box);
    k->root_is_real_.push_back(rc.real);
  }
  k->prec_ = 0;
  k->refine_to(30);

  // Designated embedding: the root nearest the requested approximation.
  Rat ar(spec.approx_re), ai(spec.approx_im);
  Rat best_d(-1);
  size_t best = 0;
  for (size_t i = 0; i < k->roots_.size(); ++i) {
    auto m = k->roots_[i].mid();
    Rat d = (m.first - ar) * (m.first - ar) + (m.second - ai) * (m.second - ai);
    if (best_d < 0 || d < best_d) {
      best_d = d;
      best = i;
    }
  }
  k->designated_ = best;

  // Certify that the embedding intertwines sigma with complex conjugation:
  // the enclosure of sigma(gen) and the conjugate of the designated enclosure
  // must single out the same root.
  for (unsigned p = 30;; p += 16) {
    if (p > 512)
      throw std::runtime_error("NumberField: could not match conjugation with embedding");
    k->refine_to(p);
    const QBox& D = k->roots_[k->designated_];
    QBox sig = eval_box(k->conj_, D);
    QBox dc = D.conj();
    int sig_hit = -1, dc_hit = -1;
    int sig_n = 0, dc_n = 0;
    for (size_t i = 0; i < k->roots_.size(); ++i) {
      if (intersects(sig, k->roots_[i])) {
        sig_hit = static_cast<int>(i);
        ++sig_n;
      }
      if (intersects(dc, k->roots_[i])) {
        dc_hit = static_cast<int>(i);
        ++dc_n;
      }
    }
    if (sig_n == 1 && dc_n == 1) {
      if (sig_hit != dc_hit)
        throw std::invalid_argument(
            "NumberField: conjugation does not act as complex conjugation in the designated "
            "embedding");
      break;
    }
  }
  return k;
}

NumberFieldPtr NumberField::rationals() {
  static NumberFieldPtr q = [] {
    Spec s;
    s.min_poly = QPoly::x_power(1);
    s.conj_gen_image = QPoly::x_power(1);
    s.approx_re = 0;
    s.approx_im = 0;
    s.name = "Q";
    s.gen_name = "t";
    return create(s);
  }();
  return q;
}

bool NumberField::is_real() const {
  return conj_ == QPoly::x_power(1).mod(f_) && root_is_real_[designated_];
}

NFElem NumberField::zero() const { return NFElem(shared_from_this(), {}); }
NFElem NumberField::one() const { return NFElem(shared_from_this(), {Rat(1)}); }
NFElem NumberField::gen() const { return NFElem(shared_from_this(), {Rat(0), Rat(1)}); }
NFElem NumberField::from_rat(const Rat& q) const { return NFElem(shared_from_this(), {q}); }
NFElem NumberField::from_coeffs(std::vector<Rat> coeffs) const {
  return NFElem(shared_from_this(), std::move(coeffs));
}

QBox NumberField::designated_box(unsigned prec) const {
  refine_to(prec);
  return roots_[designated_];
}

std::vector<QBox> NumberField::root_boxes(unsigned prec) const {
  refine_to(prec);
  return roots_;
}

void NumberField::refine_to(unsigned prec) const {
  if (prec <= prec_) return;
  const QPoly fd = f_.derivative();
  for (size_t i = 0; i < roots_.size(); ++i)
    refine_root(f_, fd, roots_[i], root_is_real_[i], prec);
  prec_ = prec;
}

int sign_of_real(const NFElem& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return a.as_rat() > 0 ? 1 : -1;
  if (!(a.conj() == a))
    throw std::invalid_argument("sign_of_real: element is not fixed by conjugation");
  for (unsigned p = 30; p <= 4096; p *= 2) {
    QBox b = a.embed(p);
    if (b.re.lo > 0) return 1;
    if (b.re.hi < 0) return -1;
  }
  throw std::runtime_error("sign_of_real: could not separate value from zero");
}

QPoly minimal_polynomial(const NFElem& a) {
  if (!a.field() || a.is_rational()) {
    Rat v = a.is_zero() ? Rat(0) : a.coeff(0);
    return QPoly::x_power(1) - QPoly(v);
  }
  const size_t d = static_cast<size_t>(a.field()->degree());
  // Rows: coordinates of a^k, augmented with the combination that produced
  // them; eliminate until a power lands in the span of the earlier ones.
  std::vector<std::vector<Rat>> basis;          // reduced rows, length d
  std::vector<int> pivot_col;                   // pivot of each basis row
  std::vector<std::vector<Rat>> combo;          // same combination, length k+1
  NFElem power(a.field()->one());
  for (size_t k = 0; k <= d; ++k) {
    std::vector<Rat> row(d, Rat(0));
    for (size_t i = 0; i < power.coeffs().size(); ++i) row[i] = power.coeffs()[i];
    std::vector<Rat> cmb(k + 1, Rat(0));
    cmb[k] = 1;
    for (size_t b = 0; b < basis.size(); ++b) {
      const Rat& lead = row[static_cast<size_t>(pivot_col[b])];
      if (lead == 0) continue;
      Rat factor = lead;
      for (size_t j = 0; j < d; ++j) row[j] -= factor * basis[b][j];
      for (size_t j = 0; j < combo[b].size(); ++j) cmb[j] -= factor * combo[b][j];
    }
    int piv = -1;
    for (size_t j = 0; j < d; ++j)
      if (row[j] != 0) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) {
      // Dependency found: sum cmb[i] * a^i = 0 with cmb[k] = 1.
      return QPoly(std::vector<Rat>(cmb.begin(), cmb.end())).make_monic();
    }
    Rat inv = Rat(1) / row[static_cast<size_t>(piv)];
    for (auto& v : row) v *= inv;
    for (auto& v : cmb) v *= inv;
    basis.push_back(std::move(row));
    pivot_col.push_back(piv);
    combo.push_back(std::move(cmb));
    power = power * a;
  }
  throw std::logic_error("minimal_polynomial: no dependency up to the field degree");
}

}  // namespace chlat
