#include <chlat/cxhyp/heisenberg.hpp>

#include <stdexcept>

namespace chlat {

namespace {
const NFElem kOne{Rat(1)};
const Rat kHalf{Rat(1) / 2};
}  // namespace

std::string HeisenbergElement::to_string() const {
  std::string s = "(z=" + z.to_string() + ", tau=" + tau.to_string();
  if (!zeta.is_one()) s += ", zeta=" + zeta.to_string();
  return s + ")";
}

HeisenbergElement make_heisenberg(const NFElem& z, const NFElem& tau, const NFElem& zeta) {
  if (tau.conj() != -tau)
    throw std::invalid_argument("make_heisenberg: vertical part must satisfy conj(tau) = -tau");
  if (zeta * zeta.conj() != kOne)
    throw std::invalid_argument("make_heisenberg: rotation part must satisfy zeta conj(zeta) = 1");
  return HeisenbergElement{z, tau, zeta};
}

HeisenbergElement heisenberg_translation(const NFElem& z, const NFElem& tau) {
  return make_heisenberg(z, tau, kOne);
}

HeisenbergElement heisenberg_vertical(const NFElem& tau) {
  return make_heisenberg(NFElem(), tau, kOne);
}

HeisenbergElement heisenberg_identity() { return HeisenbergElement{NFElem(), NFElem(), kOne}; }

HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
  NFElem z = a.z + a.zeta * b.z;
  NFElem x = a.z * (a.zeta * b.z).conj();
  NFElem tau = a.tau + b.tau + (x - x.conj());
  return HeisenbergElement{z, tau, a.zeta * b.zeta};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& a) {
  NFElem zbar = a.zeta.conj();
  return HeisenbergElement{-(zbar * a.z), -a.tau, zbar};
}

HeisenbergElement heisenberg_pow(const HeisenbergElement& a, long e) {
  HeisenbergElement base = e < 0 ? heisenberg_inverse(a) : a;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  HeisenbergElement acc = heisenberg_identity();
  HeisenbergElement sq = base;
  while (n > 0) {
    if (n & 1ul) acc = heisenberg_mul(acc, sq);
    n >>= 1;
    if (n > 0) sq = heisenberg_mul(sq, sq);
  }
  return acc;
}

NFMat3 heisenberg_matrix(const HeisenbergElement& h) {
  NFMat3 m = NFMat3::identity();
  m.at(0, 1) = -(h.z.conj() * h.zeta);
  m.at(0, 2) = (h.tau - h.z * h.z.conj()) * kHalf;
  m.at(1, 1) = h.zeta;
  m.at(1, 2) = h.z;
  return m;
}

Int self_intersection_from_commutator(const HeisenbergElement& a, const HeisenbergElement& b,
                                      const HeisenbergElement& z) {
  if (!a.is_translation() || !b.is_translation())
    throw std::invalid_argument("self_intersection_from_commutator: A and B must be translations");
  if (!z.is_vertical() || z.tau.is_zero())
    throw std::invalid_argument(
        "self_intersection_from_commutator: Z must be a nontrivial vertical translation");
  HeisenbergElement c = heisenberg_mul(heisenberg_mul(a, b),
                                       heisenberg_mul(heisenberg_inverse(a), heisenberg_inverse(b)));
  if (!c.is_vertical() || c.tau.is_zero())
    throw std::invalid_argument(
        "self_intersection_from_commutator: commutator is not a nontrivial vertical translation "
        "(z parts must be R-independent)");
  NFElem ratio = c.tau / z.tau;
  if (!ratio.is_rational())
    throw std::invalid_argument("self_intersection_from_commutator: [A,B] is not a power of Z");
  Rat k = ratio.as_rat();
  if (k.get_den() != 1)
    throw std::invalid_argument(
        "self_intersection_from_commutator: Z does not generate the vertical kernel");
  Int kk = k.get_num();
  return kk < 0 ? kk : Int(-kk);  // -|k|
}

Int self_intersection_from_abelianization(const AbelianInvariants& inv) {
  if (inv.free_rank != 2 || inv.torsion.size() > 1)
    throw std::invalid_argument(
        "self_intersection_from_abelianization: not a neat cusp abelianization (need Z^2 + Z_q)");
  Int q = inv.torsion.empty() ? Int(1) : inv.torsion[0];
  return -q;
}

}  // namespace chlat
