#include <chlat/exact/zfactor.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

namespace chlat {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  // p < 2^31, so the product fits in 64 bits.
  return (a * b) % p;
}

uint64_t powmod_small(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, p);
    b = mulmod_u64(b, b, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_small(a % p, p - 2, p); }

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void check_field(const FpPoly& a, const FpPoly& b) {
  if (a.p != b.p) throw std::invalid_argument("FpPoly: mixed characteristics");
}

// Kernel basis of the d x d matrix A over GF(p), i.e. all x with A x = 0.
// Deterministic: Gauss-Jordan with first nonzero pivot, basis indexed by free
// columns in increasing order.
std::vector<std::vector<uint64_t>> fp_kernel_basis(std::vector<std::vector<uint64_t>> A,
                                                   uint64_t p) {
  const size_t d = A.size();
  std::vector<int> pivot_of_col(d, -1);
  size_t row = 0;
  for (size_t col = 0; col < d && row < d; ++col) {
    size_t sel = row;
    while (sel < d && A[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(A[sel], A[row]);
    const uint64_t inv = invmod_u64(A[row][col], p);
    for (size_t j = col; j < d; ++j) A[row][j] = mulmod_u64(A[row][j], inv, p);
    for (size_t i = 0; i < d; ++i) {
      if (i == row || A[i][col] == 0) continue;
      const uint64_t f = A[i][col];
      for (size_t j = col; j < d; ++j) {
        const uint64_t sub = mulmod_u64(f, A[row][j], p);
        A[i][j] = (A[i][j] + p - sub) % p;
      }
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<uint64_t>> basis;
  for (size_t col = 0; col < d; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<uint64_t> v(d, 0);
    v[col] = 1;
    for (size_t c2 = 0; c2 < d; ++c2) {
      if (pivot_of_col[c2] < 0) continue;
      const uint64_t val = A[static_cast<size_t>(pivot_of_col[c2])][col];
      v[c2] = val == 0 ? 0 : p - val;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool fp_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

FpPoly fp_pth_root(const FpPoly& a) {
  // a with a' = 0, i.e. a(x) = g(x^p); over GF(p) the coefficients are fixed
  // by Frobenius, so g just collects every p-th coefficient.
  FpPoly g;
  g.p = a.p;
  g.c.resize(a.c.size() / static_cast<size_t>(a.p) + 1, 0);
  for (size_t i = 0; i * a.p < a.c.size(); ++i) g.c[i] = a.c[i * a.p];
  g.normalize();
  return g;
}

}  // namespace

FpXgcd fp_xgcd(FpPoly a, FpPoly b) {
  check_field(a, b);
  const uint64_t p = a.p;
  FpPoly r0 = a, r1 = b;
  FpPoly u0 = fp_constant(1, p), u1 = fp_constant(0, p);
  FpPoly v0 = fp_constant(0, p), v1 = fp_constant(1, p);
  while (!r1.is_zero()) {
    auto qr = fp_divmod(r0, r1);
    FpPoly u2 = fp_sub(u0, fp_mul(qr.first, u1));
    FpPoly v2 = fp_sub(v0, fp_mul(qr.first, v1));
    r0 = r1;
    r1 = qr.second;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const uint64_t lc = r0.c.back();
  if (lc != 1) {
    const uint64_t inv = invmod_u64(lc, p);
    FpPoly s = fp_constant(inv, p);
    r0 = fp_mul(r0, s);
    u0 = fp_mul(u0, s);
    v0 = fp_mul(v0, s);
  }
  return {r0, u0, v0};
}

namespace {

// ----- integer polynomials modulo m (coefficients reduced into [0, m)) -----

using ZV = std::vector<Int>;

ZV zv_trim(ZV a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int zv_deg(const ZV& a) { return static_cast<int>(a.size()) - 1; }

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

ZV zv_reduce(const ZV& a, const Int& m) {
  ZV r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
  return zv_trim(std::move(r));
}

ZV zv_add(const ZV& a, const ZV& b, const Int& m) {
  ZV r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zv_reduce(r, m);
}

ZV zv_sub(const ZV& a, const ZV& b, const Int& m) {
  ZV r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zv_reduce(r, m);
}

ZV zv_mul(const ZV& a, const ZV& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZV r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zv_reduce(r, m);
}

// Division with remainder modulo m by a polynomial whose leading coefficient
// is exactly 1.
std::pair<ZV, ZV> zv_divmod_monic(const ZV& a, const ZV& b, const Int& m) {
  if (b.empty() || b.back() != 1)
    throw std::invalid_argument("zv_divmod_monic: divisor must be monic");
  ZV rem = a;
  const int db = zv_deg(b);
  if (zv_deg(rem) < db) return {ZV{}, zv_reduce(rem, m)};
  ZV q(static_cast<size_t>(zv_deg(rem) - db) + 1, Int(0));
  for (int i = zv_deg(rem); i >= db; --i) {
    Int t = mod_pos(rem[static_cast<size_t>(i)], m);
    if (t != 0) {
      q[static_cast<size_t>(i - db)] = t;
      for (int j = 0; j <= db; ++j)
        rem[static_cast<size_t>(i - db + j)] -= t * b[static_cast<size_t>(j)];
    }
    rem[static_cast<size_t>(i)] = 0;
  }
  return {zv_trim(std::move(q)), zv_reduce(rem, m)};
}

ZV zv_from_fp(const FpPoly& a) {
  ZV r(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = Int(static_cast<unsigned long>(a.c[i]));
  return r;
}

// Symmetric representative: coefficients mapped into (-m/2, m/2].
ZV zv_symmetric(const ZV& a, const Int& m) {
  ZV r(a.size());
  Int half = m / 2;
  for (size_t i = 0; i < a.size(); ++i) {
    Int v = mod_pos(a[i], m);
    if (v > half) v -= m;
    r[i] = v;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

QPoly qpoly_from_zv(const ZV& a) {
  std::vector<Rat> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = Rat(a[i]);
  return QPoly(c);
}

// One quadratic Hensel step: given f = g h (mod m) with s g + t h = 1 (mod m),
// g, h monic, returns the same data modulo m^2.
struct HenselPair {
  ZV g, h, s, t;
};

HenselPair hensel_step(const ZV& f, const HenselPair& in, const Int& m) {
  const Int m2 = m * m;
  const ZV fr = zv_reduce(f, m2);
  ZV e = zv_sub(fr, zv_mul(in.g, in.h, m2), m2);
  auto qr = zv_divmod_monic(zv_mul(in.s, e, m2), in.h, m2);
  ZV g1 = zv_add(in.g, zv_add(zv_mul(in.t, e, m2), zv_mul(qr.first, in.g, m2), m2), m2);
  ZV h1 = zv_add(in.h, qr.second, m2);
  if (zv_deg(g1) != zv_deg(in.g) || g1.back() != 1 || zv_deg(h1) != zv_deg(in.h) ||
      h1.back() != 1)
    throw std::logic_error("hensel_step: lift lost degree or monicity");
  ZV one{Int(1)};
  ZV b = zv_sub(zv_add(zv_mul(in.s, g1, m2), zv_mul(in.t, h1, m2), m2), one, m2);
  auto cd = zv_divmod_monic(zv_mul(in.s, b, m2), h1, m2);
  ZV s1 = zv_sub(in.s, cd.second, m2);
  ZV t1 = zv_sub(in.t, zv_add(zv_mul(in.t, b, m2), zv_mul(cd.first, g1, m2), m2), m2);
  return {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// Lift the factorization node = prod(fac[lo..hi)) (mod p) to modulus M = p^(2^j),
// appending the lifted factors (monic mod M) to out.
void hensel_lift_node(const ZV& node, const std::vector<FpPoly>& fac, size_t lo, size_t hi,
                      uint64_t p, const Int& M, int steps, std::vector<ZV>& out) {
  if (hi - lo == 1) {
    out.push_back(zv_reduce(node, M));
    return;
  }
  const size_t mid = lo + (hi - lo) / 2;
  FpPoly g0 = fp_constant(1, p), h0 = fp_constant(1, p);
  for (size_t i = lo; i < mid; ++i) g0 = fp_mul(g0, fac[i]);
  for (size_t i = mid; i < hi; ++i) h0 = fp_mul(h0, fac[i]);
  FpXgcd bez = fp_xgcd(g0, h0);
  if (bez.g.degree() != 0)
    throw std::logic_error("hensel_lift_node: modular factors not coprime");
  // Normalize Bezout pair: s = u mod h0 (deg s < deg h0), t = (1 - s g0) / h0.
  FpPoly s0 = fp_mod(bez.u, h0);
  FpPoly num = fp_sub(fp_constant(1, p), fp_mul(s0, g0));
  auto td = fp_divmod(num, h0);
  if (!td.second.is_zero()) throw std::logic_error("hensel_lift_node: bezout normalization");
  HenselPair cur{zv_from_fp(g0), zv_from_fp(h0), zv_from_fp(s0), zv_from_fp(td.first)};
  Int m(static_cast<unsigned long>(p));
  for (int k = 0; k < steps; ++k) {
    cur = hensel_step(node, cur, m);
    m = m * m;
  }
  hensel_lift_node(cur.g, fac, lo, mid, p, M, steps, out);
  hensel_lift_node(cur.h, fac, mid, hi, p, M, steps, out);
}

bool zv_qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

void FpPoly::normalize() {
  for (auto& v : c) v %= p;
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly fp_from_int_poly(const std::vector<Int>& coeffs, uint64_t p) {
  if (p < 2 || p >= (uint64_t(1) << 31) || !is_prime_u64(p))
    throw std::invalid_argument("fp_from_int_poly: p must be a prime below 2^31");
  FpPoly r;
  r.p = p;
  r.c.resize(coeffs.size());
  Int m(static_cast<unsigned long>(p));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Int v = mod_pos(coeffs[i], m);
    r.c[i] = v.get_ui();
  }
  r.normalize();
  return r;
}

FpPoly fp_constant(uint64_t v, uint64_t p) {
  FpPoly r;
  r.p = p;
  r.c = {v % p};
  r.normalize();
  return r;
}

FpPoly fp_x_power(int k, uint64_t p) {
  FpPoly r;
  r.p = p;
  r.c.assign(static_cast<size_t>(k) + 1, 0);
  r.c.back() = 1;
  return r;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  check_field(a, b);
  FpPoly r;
  r.p = a.p;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
  r.normalize();
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  check_field(a, b);
  FpPoly r;
  r.p = a.p;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
  r.normalize();
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  check_field(a, b);
  FpPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  r.normalize();
  return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
  check_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("fp_divmod: division by zero");
  const uint64_t p = a.p;
  FpPoly rem = a, q;
  q.p = p;
  if (a.degree() < b.degree()) return {q, rem};
  q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
  const uint64_t binv = invmod_u64(b.c.back(), p);
  for (int i = rem.degree(); i >= b.degree(); --i) {
    const uint64_t t = mulmod_u64(rem.c[static_cast<size_t>(i)], binv, p);
    if (t != 0) {
      q.c[static_cast<size_t>(i - b.degree())] = t;
      for (int j = 0; j <= b.degree(); ++j) {
        auto& rc = rem.c[static_cast<size_t>(i - b.degree() + j)];
        rc = (rc + p - mulmod_u64(t, b.c[static_cast<size_t>(j)], p)) % p;
      }
    }
    rem.c[static_cast<size_t>(i)] = 0;
  }
  q.normalize();
  rem.normalize();
  return {q, rem};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m) { return fp_divmod(a, m).second; }

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  const uint64_t lc = a.c.back();
  if (lc == 1) return a;
  return fp_mul(a, fp_constant(invmod_u64(lc, a.p), a.p));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  check_field(a, b);
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly r;
  r.p = a.p;
  if (a.degree() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = (a.c[i] * (i % a.p)) % a.p;
  r.normalize();
  return r;
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  check_field(base, m);
  if (e < 0) throw std::invalid_argument("fp_powmod: negative exponent");
  FpPoly r = fp_constant(1, base.p);
  FpPoly b = fp_mod(base, m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = fp_mod(fp_mul(r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, b), m);
  }
  return r;
}

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& a) {
  const uint64_t p = a.p;
  FpPoly f = fp_monic(a);
  if (f.is_zero()) throw std::invalid_argument("fp_factor_squarefree: zero polynomial");
  if (f.degree() == 0) return {};
  if (f.degree() == 1) return {f};
  if (fp_gcd(f, fp_derivative(f)).degree() != 0)
    throw std::invalid_argument("fp_factor_squarefree: input not squarefree");
  const size_t d = static_cast<size_t>(f.degree());
  // Frobenius matrix: row i holds x^{i p} mod f; the Berlekamp subalgebra is
  // the left kernel of (Q - I), computed as the kernel of its transpose.
  FpPoly xp = fp_powmod(fp_x_power(1, p), Int(static_cast<unsigned long>(p)), f);
  std::vector<std::vector<uint64_t>> Q(d, std::vector<uint64_t>(d, 0));
  FpPoly cur = fp_constant(1, p);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < cur.c.size(); ++j) Q[i][j] = cur.c[j];
    if (i + 1 < d) cur = fp_mod(fp_mul(cur, xp), f);
  }
  std::vector<std::vector<uint64_t>> M(d, std::vector<uint64_t>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      uint64_t v = Q[j][i];  // transpose
      if (i == j) v = (v + p - 1) % p;
      M[i][j] = v;
    }
  auto kernel = fp_kernel_basis(std::move(M), p);
  const size_t r = kernel.size();
  std::vector<FpPoly> factors{f};
  for (const auto& kv : kernel) {
    if (factors.size() >= r) break;
    FpPoly v;
    v.p = p;
    v.c = kv;
    v.normalize();
    if (v.degree() < 1) continue;  // the constant kernel vector cannot split
    std::vector<FpPoly> next;
    for (const auto& g : factors) {
      if (g.degree() <= 1) {
        next.push_back(g);
        continue;
      }
      FpPoly rem = g;
      std::vector<FpPoly> pieces;
      for (uint64_t c = 0; c < p && rem.degree() > 0; ++c) {
        FpPoly shifted = fp_sub(fp_mod(v, rem), fp_constant(c, p));
        FpPoly h = fp_gcd(rem, shifted);
        if (h.degree() > 0 && h.degree() < rem.degree()) {
          pieces.push_back(h);
          rem = fp_divmod(rem, h).first;
        }
      }
      if (rem.degree() > 0) pieces.push_back(fp_monic(rem));
      for (auto& x : pieces) next.push_back(std::move(x));
    }
    factors = std::move(next);
  }
  if (factors.size() != r)
    throw std::logic_error("fp_factor_squarefree: splitting did not reach factor count");
  std::sort(factors.begin(), factors.end(), fp_less);
  return factors;
}

std::vector<FpPoly> fp_factor(const FpPoly& a) {
  FpPoly f = fp_monic(a);
  if (f.is_zero()) throw std::invalid_argument("fp_factor: zero polynomial");
  std::vector<FpPoly> out;
  if (f.degree() == 0) return out;
  FpPoly fd = fp_derivative(f);
  if (fd.is_zero()) {
    // f(x) = g(x^p): factor g and repeat each factor p times.
    auto sub = fp_factor(fp_pth_root(f));
    for (const auto& q : sub)
      for (uint64_t k = 0; k < f.p; ++k) out.push_back(q);
  } else {
    FpPoly d = fp_gcd(f, fd);
    if (d.degree() == 0) {
      out = fp_factor_squarefree(f);
    } else {
      FpPoly w = fp_divmod(f, d).first;  // product of factors with multiplicity not divisible by p
      out = fp_factor_squarefree(w);
      auto rest = fp_factor(d);
      for (auto& q : rest) out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end(), fp_less);
  return out;
}

std::vector<Int> int_coeffs(const QPoly& f) {
  std::vector<Int> r(static_cast<size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) {
    const Rat& c = f.coeff(i);
    if (!is_integer(c)) throw std::invalid_argument("int_coeffs: non-integer coefficient");
    r[static_cast<size_t>(i)] = to_int(c);
  }
  return r;
}

std::vector<QPoly> z_factor_squarefree(const QPoly& f) {
  if (!f.is_monic() || !f.has_integer_coeffs())
    throw std::invalid_argument("z_factor_squarefree: need a monic integer polynomial");
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("z_factor_squarefree: need degree >= 1");
  if (poly_gcd(f, f.derivative()).degree() != 0)
    throw std::invalid_argument("z_factor_squarefree: input not squarefree");
  const ZV fz = int_coeffs(f);
  if (n == 1) return {f};

  // Choose a prime keeping f squarefree mod p; among the first few usable
  // primes take the one with the fewest modular factors.
  uint64_t best_p = 0;
  std::vector<FpPoly> best_fac;
  int tried = 0;
  for (uint64_t p = 2; p < 1000 && tried < 5; ++p) {
    if (!is_prime_u64(p)) continue;
    FpPoly fp = fp_from_int_poly(fz, p);
    if (fp.degree() != n) continue;  // cannot happen for monic f, kept for clarity
    if (fp_gcd(fp, fp_derivative(fp)).degree() != 0) continue;
    auto fac = fp_factor_squarefree(fp);
    ++tried;
    if (best_p == 0 || fac.size() < best_fac.size()) {
      best_p = p;
      best_fac = std::move(fac);
    }
    if (best_fac.size() == 1) break;
  }
  if (best_p == 0)
    throw std::logic_error("z_factor_squarefree: no usable prime found below 1000");
  if (best_fac.size() == 1) return {f};

  // Landau-Mignotte style bound on factor coefficients, then lift to p^(2^j).
  Int norm2 = 0;
  for (const auto& c : fz) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int bound = (Int(1) << n) * norm;
  Int target = 2 * bound + 1;
  Int M(static_cast<unsigned long>(best_p));
  int steps = 0;
  while (M < target) {
    M = M * M;
    ++steps;
  }
  std::vector<ZV> lifted;
  hensel_lift_node(fz, best_fac, 0, best_fac.size(), best_p, M, steps, lifted);

  // Recombine: try subsets of the lifted modular factors, smallest first.
  std::vector<size_t> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  QPoly fcur = f;
  std::vector<QPoly> result;
  size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZV prod{Int(1)};
      for (size_t i = 0; i < s; ++i) prod = zv_mul(prod, lifted[alive[idx[i]]], M);
      ZV cand = zv_symmetric(prod, M);
      bool ok = !cand.empty();
      if (ok && cand[0] != 0) {
        const Rat& c0 = fcur.coeff(0);
        Int f0 = to_int(c0);  // fcur stays integer monic throughout
        ok = mpz_divisible_p(f0.get_mpz_t(), cand[0].get_mpz_t()) != 0;
      }
      if (ok) {
        QPoly candq = qpoly_from_zv(cand);
        auto qr = fcur.divmod(candq);
        if (qr.second.degree() < 0 && qr.first.has_integer_coeffs()) {
          result.push_back(candq);
          fcur = qr.first;
          std::vector<size_t> keep;
          for (size_t i = 0, k = 0; i < alive.size(); ++i) {
            if (k < s && idx[k] == i)
              ++k;
            else
              keep.push_back(alive[i]);
          }
          alive = std::move(keep);
          found = true;
          break;
        }
      }
      // next s-combination of {0..alive.size()-1}
      size_t i = s;
      while (i-- > 0) {
        if (idx[i] + (s - i) < alive.size()) {
          ++idx[i];
          for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
    if (!found) ++s;
  }
  if (fcur.degree() > 0) result.push_back(fcur);
  std::sort(result.begin(), result.end(), zv_qpoly_less);
  return result;
}

bool z_irreducible(const QPoly& f, QPoly* witness) {
  if (!f.is_monic() || !f.has_integer_coeffs())
    throw std::invalid_argument("z_irreducible: need a monic integer polynomial");
  if (f.degree() < 1) throw std::invalid_argument("z_irreducible: need degree >= 1");
  if (f.degree() == 1) return true;
  QPoly g = poly_gcd(f, f.derivative());
  if (g.degree() > 0) {
    if (witness) *witness = g;  // monic rational factor of a monic integer poly is integral
    return false;
  }
  auto fac = z_factor_squarefree(f);
  if (fac.size() == 1) return true;
  if (witness) *witness = fac.front();
  return false;
}

QPoly cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::map<unsigned, QPoly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  QPoly result;
  if (n == 1) {
    result = QPoly::from_int_coeffs({-1, 1});
  } else {
    QPoly num = QPoly::x_power(static_cast<int>(n)) - QPoly(Rat(1));
    for (unsigned d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      auto qr = num.divmod(cyclotomic(d));
      if (qr.second.degree() >= 0) throw std::logic_error("cyclotomic: inexact division");
      num = qr.first;
    }
    result = num;
  }
  memo.emplace(n, result);
  return result;
}

}  // namespace chlat
