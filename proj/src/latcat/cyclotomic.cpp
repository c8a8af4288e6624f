#include <chlat/latcat/cyclotomic.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace chlat::latcat {

namespace {

QPoly x_power_minus_one(int n) {
  std::vector<Rat> c(size_t(n) + 1, Rat(0));
  c[0] = Rat(-1);
  c[size_t(n)] = Rat(1);
  return QPoly(std::move(c));
}

}  // namespace

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::map<int, QPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  QPoly result = x_power_minus_one(n);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = result.divmod(cyclotomic_polynomial(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: non-exact division");
    result = q;
  }
  cache.emplace(n, result);
  return result;
}

QPoly w_basis_poly(int k) {
  if (k < 0) throw std::invalid_argument("w_basis_poly: k must be >= 0");
  QPoly prev(Rat(2));
  if (k == 0) return prev;
  QPoly cur = QPoly::x_power(1);
  const QPoly x = cur;
  for (int i = 1; i < k; ++i) {
    QPoly next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

QPoly real_cyclotomic_min_poly(int L) {
  if (L < 1) throw std::invalid_argument("real_cyclotomic_min_poly: L must be >= 1");
  if (L == 1) return QPoly::from_int_coeffs({2, 1});   // theta = -2
  if (L == 2) return QPoly::x_power(1);                // theta = 0
  // theta = zeta + 1/zeta for zeta a primitive 2L-th root of unity.
  // Phi_{2L} is palindromic of even degree 2m; fold it through the W-basis:
  // z^{-m} Phi_{2L}(z) = a_m + sum_{k=1}^{m} a_{m+k} (z^k + z^{-k}),
  // so psi(x) = a_m + sum a_{m+k} W_k(x) kills theta, is monic of degree
  // m = phi(2L)/2 = [Q(theta):Q], hence is the minimal polynomial.
  QPoly phi = cyclotomic_polynomial(2 * L);
  const int m = phi.degree() / 2;
  if (phi.degree() != 2 * m) throw std::logic_error("real_cyclotomic_min_poly: odd degree");
  QPoly psi(phi.coeff(m));
  for (int k = 1; k <= m; ++k) psi = psi + w_basis_poly(k) * phi.coeff(m + k);
  if (!psi.is_monic() || psi.degree() != m)
    throw std::logic_error("real_cyclotomic_min_poly: folding failed");
  return psi;
}

NumberFieldPtr real_cyclotomic_field(int L) {
  NumberField::Spec spec;
  spec.min_poly = real_cyclotomic_min_poly(L);
  spec.conj_gen_image = QPoly::x_power(1);  // totally real: conjugation is trivial
  spec.approx_re = 2.0 * std::cos(M_PI / double(L));
  spec.approx_im = 0.0;
  spec.name = "Q(2cos(pi/" + std::to_string(L) + "))";
  spec.gen_name = "c";
  return NumberField::create(spec);
}

NFElem two_cos_pi_over(int m, int L, const NumberFieldPtr& field) {
  if (m < 1 || L % m != 0)
    throw std::invalid_argument("two_cos_pi_over: m must divide L");
  // W_k(theta) = 2 cos(k pi / L); take k = L/m.
  const QPoly w = w_basis_poly(L / m);
  // For a degree-1 field the generator is the rational root itself.
  const NFElem theta = (field->degree() == 1)
                           ? field->from_rat(-field->min_poly().coeff(0))
                           : field->gen();
  return w.eval_in(theta, field->one());
}

}  // namespace chlat::latcat
