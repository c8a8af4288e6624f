#include <chlat/latcat/triangle.hpp>

#include <chlat/cxhyp/hermitian.hpp>
#include <chlat/groups/group_ops.hpp>
#include <chlat/latcat/cyclotomic.hpp>

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace chlat::latcat {

namespace {

// Reflection in the mirror normal e_i for the Coxeter diagram with edge
// labels m_ij: e_i -> -e_i, e_j -> e_j + 2 cos(pi/m_ij) e_i (columns are
// images of basis vectors).
NFMat3 tits_reflection(int i, const NFElem& lam_to_next, const NFElem& lam_to_prev,
                       const NumberFieldPtr& field) {
  NFMat3 s = NFMat3::identity();
  for (auto& e : s.m) e = e * field->one();  // put entries in the field
  s.at(i, i) = field->from_rat(Rat(-1));
  const int j = (i + 1) % 3;
  const int k = (i + 2) % 3;
  s.at(i, j) = lam_to_next;
  s.at(i, k) = lam_to_prev;
  return s;
}

}  // namespace

NFMat3 TriangleTarget::evaluate(const Word& w) const {
  NFMat3 images[2] = {x, y};
  NFMat3 acc = NFMat3::identity();
  for (auto& e : acc.m) e = e * field->one();
  for (int letter : w) {
    const NFMat3& g = images[std::abs(letter) - 1];
    acc = acc * (letter > 0 ? g : g.inverse());
  }
  return acc;
}

TriangleTarget triangle_target(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2)
    throw std::invalid_argument("triangle_target: p, q, r must all be >= 2");
  TriangleTarget t;
  t.p = p;
  t.q = q;
  t.r = r;

  const Rat s = make_rat(1, p) + make_rat(1, q) + make_rat(1, r);
  t.geometry = s > 1   ? TriangleGeometry::spherical
               : s == 1 ? TriangleGeometry::euclidean
                        : TriangleGeometry::hyperbolic;

  t.presentation = make_presentation(
      {"x", "y"},
      {"x^" + std::to_string(p), "y^" + std::to_string(q), "(x*y)^" + std::to_string(r)});

  const long L = std::lcm(std::lcm(long(p), long(q)), long(r));
  t.field = real_cyclotomic_field(int(L));
  const NFElem lam_p = two_cos_pi_over(p, int(L), t.field);
  const NFElem lam_q = two_cos_pi_over(q, int(L), t.field);
  const NFElem lam_r = two_cos_pi_over(r, int(L), t.field);

  // Edge labels: m_12 = p, m_23 = q, m_13 = r.
  const NFMat3 s1 = tits_reflection(0, lam_p, lam_r, t.field);
  const NFMat3 s2 = tits_reflection(1, lam_q, lam_p, t.field);
  const NFMat3 s3 = tits_reflection(2, lam_r, lam_q, t.field);
  t.x = s1 * s2;
  t.y = s2 * s3;

  // Invariant symmetric Gram matrix 2*B.
  t.form = NFMat3::identity();
  const NFElem two = t.field->from_rat(Rat(2));
  t.form.at(0, 0) = two;
  t.form.at(1, 1) = two;
  t.form.at(2, 2) = two;
  t.form.at(0, 1) = -lam_p;
  t.form.at(1, 0) = -lam_p;
  t.form.at(1, 2) = -lam_q;
  t.form.at(2, 1) = -lam_q;
  t.form.at(0, 2) = -lam_r;
  t.form.at(2, 0) = -lam_r;

  // Certify the model: relators evaluate to the exact identity and the
  // generators preserve the form.
  const NFMat3 id = t.x * t.x.inverse();
  if (t.x.pow(p) != id || t.y.pow(q) != id || (t.x * t.y).pow(r) != id)
    throw std::logic_error("triangle_target: relator failed in the matrix model");
  for (const NFMat3* g : {&t.x, &t.y}) {
    if (g->conj_transpose() * t.form * *g != t.form)
      throw std::logic_error("triangle_target: generator does not preserve the form");
  }
  if (t.geometry == TriangleGeometry::hyperbolic) {
    if (hermitian_signature(t.form) != std::make_pair(2, 1))
      throw std::logic_error("triangle_target: hyperbolic form signature is not (2,1)");
  }
  return t;
}

long triangle_tf_index(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2)
    throw std::invalid_argument("triangle_tf_index: p, q, r must all be >= 2");
  const Rat s = make_rat(1, p) + make_rat(1, q) + make_rat(1, r);
  if (s > 1)
    throw std::invalid_argument("triangle_tf_index: spherical triple has no torsion-free subgroup");
  const long n0 = std::lcm(std::lcm(long(p), long(q)), long(r));
  if (s == 1) return n0;  // Euclidean: the translation lattice has index lcm
  const Rat chi = s - 1;  // orbifold Euler characteristic of D(p,q,r)
  const Rat scaled = chi * n0;
  if (!is_integer(scaled))
    throw std::logic_error("triangle_tf_index: lcm * chi must be an integer");
  const Int numerator = scaled.get_num();
  const bool odd = mpz_odd_p(numerator.get_mpz_t()) != 0;
  return odd ? 2 * n0 : n0;
}

}  // namespace chlat::latcat
