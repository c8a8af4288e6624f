#include <chlat/cxhyp/hermitian.hpp>

#include <chlat/exact/box.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace chlat {

namespace {

bool is_self_adjoint(const NFMat3& h) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (h.at(i, j).conj() != h.at(j, i)) return false;
  return true;
}

NFElem form_value(const NFMat3& h, const NFVec3& x, const NFVec3& y) {
  // y* H x
  NFElem acc;
  for (int k = 0; k < 3; ++k) {
    NFElem row;  // (H x)_k
    for (int j = 0; j < 3; ++j) row = row + h.at(k, j) * x[j];
    acc = acc + y[k].conj() * row;
  }
  return acc;
}

// Signature by orthogonalizing a basis against the form (works whenever the
// form is nondegenerate, including when a leading principal minor vanishes).
std::pair<int, int> signature_by_diagonalization(const NFMat3& h) {
  std::vector<NFVec3> basis;
  for (int i = 0; i < 3; ++i) {
    NFVec3 e{NFElem(Rat(0)), NFElem(Rat(0)), NFElem(Rat(0))};
    e[static_cast<std::size_t>(i)] = NFElem(Rat(1));
    basis.push_back(e);
  }
  int pos = 0, neg = 0;
  while (!basis.empty()) {
    // Find an anisotropic vector in the remaining subspace.
    std::size_t pick = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!form_value(h, basis[i], basis[i]).is_zero()) {
        pick = i;
        break;
      }
    }
    if (pick == basis.size()) {
      // Every remaining basis vector is null. A nondegenerate form restricted
      // to this subspace still pairs two of them nontrivially; v + c w is
      // then anisotropic for c = <v,w>.
      bool fixed = false;
      for (std::size_t i = 0; i < basis.size() && !fixed; ++i) {
        for (std::size_t j = 0; j < basis.size() && !fixed; ++j) {
          if (i == j) continue;
          NFElem c = form_value(h, basis[i], basis[j]);
          if (!c.is_zero()) {
            for (int k = 0; k < 3; ++k) basis[i][static_cast<std::size_t>(k)] =
                basis[i][static_cast<std::size_t>(k)] + c * basis[j][static_cast<std::size_t>(k)];
            pick = i;
            fixed = true;
          }
        }
      }
      if (!fixed) throw std::invalid_argument("hermitian_signature: degenerate form");
    }
    NFVec3 v = basis[pick];
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(pick));
    NFElem nv = form_value(h, v, v);
    int s = sign_of_real(nv);
    if (s > 0)
      ++pos;
    else
      ++neg;
    // Project the rest orthogonally to v: w -= (<w,v>/<v,v>) v.
    for (auto& w : basis) {
      NFElem coef = form_value(h, w, v) / nv;
      for (int k = 0; k < 3; ++k)
        w[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k)] -
                                         coef * v[static_cast<std::size_t>(k)];
    }
  }
  return {pos, neg};
}

}  // namespace

std::pair<int, int> hermitian_signature(const NFMat3& h) {
  if (!is_self_adjoint(h)) throw std::invalid_argument("hermitian_signature: not self-adjoint");
  if (h.det().is_zero()) throw std::invalid_argument("hermitian_signature: degenerate form");

  // Fast path: Jacobi's criterion on leading principal minors, valid when
  // none of them vanish. The diagonal entries of a congruent diagonal form
  // are d1, d2/d1, d3/d2.
  NFElem d1 = h.at(0, 0);
  NFElem d2 = h.at(0, 0) * h.at(1, 1) - h.at(0, 1) * h.at(1, 0);
  NFElem d3 = h.det();
  if (!d1.is_zero() && !d2.is_zero()) {
    int s1 = sign_of_real(d1);
    int s2 = sign_of_real(d2);
    int s3 = sign_of_real(d3);
    int pos = 0, neg = 0;
    (s1 > 0 ? pos : neg)++;
    (s1 * s2 > 0 ? pos : neg)++;
    (s2 * s3 > 0 ? pos : neg)++;
    return {pos, neg};
  }
  return signature_by_diagonalization(h);
}

NFElem HermitianForm::inner(const NFVec3& x, const NFVec3& y) const {
  return form_value(mat, x, y);
}

int HermitianForm::vector_sign(const NFVec3& v) const {
  NFElem n = inner(v, v);
  if (n.is_zero()) return 0;
  return sign_of_real(n);
}

HermitianForm make_hermitian_form(const NFMat3& h) {
  auto sig = hermitian_signature(h);  // validates self-adjointness too
  if (sig != std::pair<int, int>(2, 1))
    throw std::invalid_argument("make_hermitian_form: signature is not (2,1)");
  return HermitianForm{h};
}

std::optional<NFElem> unitary_scalar(const NFMat3& a, const HermitianForm& form) {
  NFMat3 g = a.conj_transpose() * form.mat * a;
  // Find s with g = s * H entrywise. H has a nonzero entry (nondegenerate).
  NFElem s;
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int j = 0; j < 3 && !found; ++j)
      if (!form.mat.at(i, j).is_zero()) {
        s = g.at(i, j) / form.mat.at(i, j);
        found = true;
      }
  if (s.is_zero()) return std::nullopt;  // singular A
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (g.at(i, j) != s * form.mat.at(i, j)) return std::nullopt;
  return s;
}

bool verify_unitary(const NFMat3& a, const HermitianForm& form) {
  auto s = unitary_scalar(a, form);
  return s.has_value() && s->is_one();
}

ProjUnitaryMatrix make_proj_unitary(const NFMat3& a, const HermitianForm& form) {
  auto s = unitary_scalar(a, form);
  if (!s.has_value())
    throw std::invalid_argument("make_proj_unitary: matrix does not preserve the form");
  return ProjUnitaryMatrix{a, *s};
}

ProjUnitaryMatrix build_reflection(const NFVec3& v0, const NFElem& zeta,
                                   const HermitianForm& form) {
  NFElem n0 = form.inner(v0, v0);
  if (n0.is_zero())
    throw std::invalid_argument("build_reflection: mirror vector is null");
  if (zeta * zeta.conj() != NFElem(Rat(1)))
    throw std::invalid_argument("build_reflection: rotation factor is not unitary");
  NFElem coef = (zeta - NFElem(Rat(1))) / n0;
  // Row covector V0* H.
  NFVec3 cov;
  for (int j = 0; j < 3; ++j) {
    NFElem acc;
    for (int k = 0; k < 3; ++k) acc = acc + v0[static_cast<std::size_t>(k)].conj() * form.mat.at(k, j);
    cov[static_cast<std::size_t>(j)] = acc;
  }
  NFMat3 r = NFMat3::identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.at(i, j) = r.at(i, j) + coef * v0[static_cast<std::size_t>(i)] * cov[static_cast<std::size_t>(j)];
  ProjUnitaryMatrix out = make_proj_unitary(r, form);
  if (!out.strictly_unitary())
    throw std::logic_error("build_reflection: reflection failed strict unitarity");
  return out;
}

double point_distance(const NFVec3& v, const NFVec3& w, const HermitianForm& form) {
  NFElem nv = form.inner(v, v);
  NFElem nw = form.inner(w, w);
  if (nv.is_zero() || sign_of_real(nv) >= 0 || nw.is_zero() || sign_of_real(nw) >= 0)
    throw std::invalid_argument("point_distance: both vectors must be negative");
  NFElem x = form.inner(v, w);
  NFElem ratio = (x * x.conj()) / (nv * nw);  // real, >= 1
  QBox box = ratio.embed(80);
  double r = box.re.mid().get_d();
  if (r < 1.0) r = 1.0;  // guard rounding just below the metric floor
  return 2.0 * std::acosh(std::sqrt(r));
}

}  // namespace chlat
