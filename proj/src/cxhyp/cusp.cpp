#include <chlat/cxhyp/cusp.hpp>

#include <chlat/exact/nf_poly.hpp>

#include <stdexcept>
#include <string>

namespace chlat {

namespace {

const NFElem kOne{Rat(1)};

std::string gen_label(std::size_t i) { return "generator " + std::to_string(i + 1); }

// The line fixed by every generator: intersect the eigenspaces of each
// generator's repeated eigenvalue. Cusp-stabilizing elements always have a
// repeated eigenvalue (their triangular form has equal corner entries), so
// a generator without one is rejected with a diagnostic.
NFVec3 common_fixed_null_vector(const std::vector<ProjUnitaryMatrix>& gens,
                                const HermitianForm& form) {
  std::vector<NFVec3> common;
  bool first = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const NFMat3& a = gens[i].mat;
    auto lam = nfp_repeated_root(a.char_poly());
    if (!lam.has_value())
      throw std::invalid_argument(
          "cusp_analyze: " + gen_label(i) +
          " has no repeated eigenvalue over the field (regular semisimple, or its eigenvalues "
          "do not lie in the field); not a cusp group");
    std::vector<NFVec3> eig = kernel_basis(a - NFMat3::scalar(*lam));
    if (eig.empty())
      throw std::invalid_argument("cusp_analyze: " + gen_label(i) +
                                  " eigenspace computation failed (no kernel)");
    common = first ? eig : intersect_spans(common, eig);
    first = false;
    if (common.empty())
      throw std::invalid_argument(
          "cusp_analyze: generators share no common fixed line; not a cusp group");
  }

  if (common.size() == 1) {
    if (!form.norm(common[0]).is_zero())
      throw std::invalid_argument(
          "cusp_analyze: the common fixed line is not null (common fixed point is not on the "
          "boundary); not a cusp group");
    return common[0];
  }

  if (common.size() == 3)
    throw std::invalid_argument(
        "cusp_analyze: generators act as scalars (trivial projective action); not a cusp group");

  // Two-dimensional common eigenspace (e.g. all generators vertical
  // translations). The fixed null line is the radical of the restricted
  // form: solve sum_j c_j <s_j, s_i> = 0.
  NFElem g00 = form.inner(common[0], common[0]);
  NFElem g01 = form.inner(common[1], common[0]);
  NFElem g10 = form.inner(common[0], common[1]);
  NFElem g11 = form.inner(common[1], common[1]);
  NFElem det = g00 * g11 - g01 * g10;
  if (!det.is_zero())
    throw std::invalid_argument(
        "cusp_analyze: generators fix a complex geodesic pointwise (nondegenerate common "
        "eigenplane); the fixed boundary point is ambiguous");
  NFElem c0, c1;
  if (!g00.is_zero() || !g01.is_zero()) {
    c0 = -g01;
    c1 = g00;
  } else if (!g10.is_zero() || !g11.is_zero()) {
    c0 = -g11;
    c1 = g10;
  } else {
    throw std::invalid_argument(
        "cusp_analyze: common eigenplane is totally isotropic (impossible for signature (2,1); "
        "inconsistent form)");
  }
  NFVec3 v;
  for (int k = 0; k < 3; ++k)
    v[static_cast<std::size_t>(k)] = c0 * common[0][static_cast<std::size_t>(k)] +
                                     c1 * common[1][static_cast<std::size_t>(k)];
  if (vec_is_zero(v) || !form.norm(v).is_zero())
    throw std::invalid_argument("cusp_analyze: radical extraction failed; not a cusp group");
  return v;
}

// Cusp basis (V, W, U): W positive and orthogonal to V; U null, orthogonal
// to W, with <U,V> = <W,W>. Then Q* H Q = <W,W> * antidiag(1,1,1).
NFMat3 cusp_basis(const NFVec3& v, const HermitianForm& form) {
  // V-perp = kernel of the covector X -> V* H X.
  NFMat3 row = NFMat3::zero();
  for (int j = 0; j < 3; ++j) {
    NFElem acc;
    for (int k = 0; k < 3; ++k) acc = acc + v[static_cast<std::size_t>(k)].conj() * form.mat.at(k, j);
    row.at(0, j) = acc;
  }
  std::vector<NFVec3> perp = kernel_basis(row);
  if (perp.size() != 2)
    throw std::logic_error("cusp_analyze: V-perp is not two-dimensional");

  NFVec3 w;
  if (!form.norm(perp[0]).is_zero()) {
    w = perp[0];
  } else if (!form.norm(perp[1]).is_zero()) {
    w = perp[1];
  } else {
    NFElem c = form.inner(perp[0], perp[1]);
    if (c.is_zero())
      throw std::logic_error("cusp_analyze: V-perp totally isotropic (impossible in (2,1))");
    for (int k = 0; k < 3; ++k)
      w[static_cast<std::size_t>(k)] = perp[0][static_cast<std::size_t>(k)] +
                                       c * perp[1][static_cast<std::size_t>(k)];
  }
  NFElem alpha = form.norm(w);
  if (sign_of_real(alpha) < 0)
    throw std::logic_error("cusp_analyze: vector orthogonal to the null vertex is negative");

  // U0: a standard basis vector not orthogonal to V.
  NFVec3 u0{NFElem(), NFElem(), NFElem()};
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i) {
    NFVec3 e{NFElem(), NFElem(), NFElem()};
    e[static_cast<std::size_t>(i)] = kOne;
    if (!form.inner(e, v).is_zero()) {
      u0 = e;
      found = true;
    }
  }
  if (!found) throw std::logic_error("cusp_analyze: form degenerate at the vertex");

  // Remove the W-component, then add a multiple of V to reach the null cone.
  NFElem cw = form.inner(u0, w) / alpha;
  NFVec3 u1;
  for (int k = 0; k < 3; ++k)
    u1[static_cast<std::size_t>(k)] =
        u0[static_cast<std::size_t>(k)] - cw * w[static_cast<std::size_t>(k)];
  NFElem r = form.inner(u1, u1);
  NFElem beta = form.inner(u1, v);
  NFElem s = -(r / (beta.conj() * NFElem(Rat(2))));
  NFVec3 u;
  for (int k = 0; k < 3; ++k)
    u[static_cast<std::size_t>(k)] =
        u1[static_cast<std::size_t>(k)] + s * v[static_cast<std::size_t>(k)];

  // Scale U so <U,V> = <W,W>; then the corner entries of Q* H Q match the
  // middle one and the triangular readout below is exact.
  NFElem mu = alpha / form.inner(u, v);
  for (auto& x : u) x = mu * x;

  NFMat3 q;
  for (int i = 0; i < 3; ++i) {
    q.at(i, 0) = v[static_cast<std::size_t>(i)];
    q.at(i, 1) = w[static_cast<std::size_t>(i)];
    q.at(i, 2) = u[static_cast<std::size_t>(i)];
  }
  return q;
}

}  // namespace

CuspAnalysis cusp_analyze(const std::vector<ProjUnitaryMatrix>& gens,
                          const HermitianForm& form) {
  if (gens.empty()) throw std::invalid_argument("cusp_analyze: no generators");

  CuspAnalysis out;
  out.vertex = common_fixed_null_vector(gens, form);
  out.q = cusp_basis(out.vertex, form);
  out.q_inv = out.q.inverse();

  // Sanity: the cusp basis really normalizes the form.
  {
    NFMat3 phi = out.q.conj_transpose() * form.mat * out.q;
    const NFElem& a = phi.at(1, 1);
    NFMat3 expect = NFMat3::zero();
    expect.at(0, 2) = a;
    expect.at(1, 1) = a;
    expect.at(2, 0) = a;
    if (phi != expect) throw std::logic_error("cusp_analyze: basis normalization failed");
  }

  out.neat = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    NFMat3 t = out.q_inv * gens[i].mat * out.q;
    if (!t.at(1, 0).is_zero() || !t.at(2, 0).is_zero() || !t.at(2, 1).is_zero())
      throw std::logic_error("cusp_analyze: conjugated generator is not upper triangular");
    if (t.at(0, 0).is_zero())
      throw std::invalid_argument("cusp_analyze: " + gen_label(i) +
                                  " has vanishing top-left entry after triangularization; "
                                  "not parabolic or elliptic at the cusp");
    t = t.scaled(t.at(0, 0).inverse());
    if (!t.at(2, 2).is_one())
      throw std::invalid_argument(
          "cusp_analyze: " + gen_label(i) +
          " is loxodromic at the cusp (corner eigenvalues differ); not a cusp group");

    NFElem zeta = t.at(1, 1);
    NFElem z = t.at(1, 2);
    NFElem tau = t.at(0, 2) * Rat(2) + z * z.conj();
    // Theorem-level consequences of unitarity in the normalized basis;
    // violations mean an internal error, not bad input.
    if (t.at(0, 1) != -(z.conj() * zeta))
      throw std::logic_error("cusp_analyze: triangular form has inconsistent (1,2) entry");
    out.heis.push_back(make_heisenberg(z, tau, zeta));
    out.triangular.push_back(t);

    bool uni = zeta.is_one();
    if (uni) {
      NFMat3 n = t - NFMat3::identity();
      if (!(n * n * n).is_zero())
        throw std::logic_error("cusp_analyze: unipotence check failed on triangular form");
    }
    out.unipotent.push_back(uni);
    if (!uni) out.neat = false;
  }
  return out;
}

std::string CuspAnalysis::report() const {
  std::string s = "cusp vertex: (" + vertex[0].to_string() + ", " + vertex[1].to_string() +
                  ", " + vertex[2].to_string() + ")\n";
  for (std::size_t i = 0; i < heis.size(); ++i) {
    s += "generator " + std::to_string(i + 1) + ": " + heis[i].to_string() +
         (unipotent[i] ? "  [unipotent]" : "  [rotation part nontrivial]") + "\n";
  }
  s += neat ? "neat: yes (all generators unipotent)\n" : "neat: no\n";
  return s;
}

}  // namespace chlat
