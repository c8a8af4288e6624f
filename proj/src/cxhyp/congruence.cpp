#include <chlat/cxhyp/congruence.hpp>

#include <array>
#include <stdexcept>

namespace chlat {

namespace {

using FpVec = std::array<FpPoly, 3>;

// Canonical index of a normalized projective point (first nonzero coord 1).
std::size_t point_index(const ResidueField& rf, const FpVec& v, std::size_t q) {
  if (!v[0].is_zero()) return static_cast<std::size_t>(rf.encode(v[1])) * q +
                              static_cast<std::size_t>(rf.encode(v[2]));
  if (!v[1].is_zero()) return q * q + static_cast<std::size_t>(rf.encode(v[2]));
  return q * q + q;
}

FpVec point_at(const ResidueField& rf, std::size_t idx, std::size_t q) {
  if (idx < q * q)
    return {rf.one(), rf.decode(static_cast<uint64_t>(idx / q)),
            rf.decode(static_cast<uint64_t>(idx % q))};
  if (idx < q * q + q) return {rf.zero(), rf.one(), rf.decode(static_cast<uint64_t>(idx - q * q))};
  return {rf.zero(), rf.zero(), rf.one()};
}

}  // namespace

CongruenceImage congruence_image(const std::vector<ProjUnitaryMatrix>& gens,
                                 const ResidueFieldPtr& rf,
                                 std::size_t max_points) {
  if (!rf) throw std::invalid_argument("congruence_image: null residue field");
  Int qi = rf->order();
  if (!qi.fits_ulong_p())
    throw std::invalid_argument("congruence_image: residue field too large");
  std::size_t q = static_cast<std::size_t>(qi.get_ui());
  std::size_t n = q * q + q + 1;
  if (n > max_points)
    throw std::invalid_argument("congruence_image: projective plane exceeds the point cap");

  std::vector<Perm> images;
  for (const ProjUnitaryMatrix& g : gens) {
    // Reduce the matrix entries (throws on p-irregular entries).
    std::array<FpPoly, 9> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(3 * i + j)] = rf->reduce(g.mat.at(i, j));

    Perm perm = Perm::identity(static_cast<int>(n));
    std::vector<bool> hit(n, false);
    for (std::size_t idx = 0; idx < n; ++idx) {
      FpVec x = point_at(*rf, idx, q);
      FpVec y{rf->zero(), rf->zero(), rf->zero()};
      for (int j = 0; j < 3; ++j) {
        FpPoly acc = rf->zero();
        for (int k = 0; k < 3; ++k)
          acc = rf->add(acc, rf->mul(x[static_cast<std::size_t>(k)],
                                     m[static_cast<std::size_t>(3 * k + j)]));
        y[static_cast<std::size_t>(j)] = acc;
      }
      int lead = -1;
      for (int k = 0; k < 3 && lead < 0; ++k)
        if (!y[static_cast<std::size_t>(k)].is_zero()) lead = k;
      if (lead < 0)
        throw std::invalid_argument("congruence_image: generator is singular mod p");
      FpPoly s = rf->inv(y[static_cast<std::size_t>(lead)]);
      for (auto& c : y) c = rf->mul(c, s);
      std::size_t to = point_index(*rf, y, q);
      perm.map[idx] = static_cast<int>(to);
      if (hit[to])
        throw std::invalid_argument("congruence_image: generator is not injective mod p");
      hit[to] = true;
    }
    images.push_back(std::move(perm));
  }

  PermGroup grp = images.empty() ? PermGroup(std::vector<Perm>{}, static_cast<int>(n))
                                 : PermGroup(images);
  return CongruenceImage{rf, n, std::move(images), std::move(grp)};
}

}  // namespace chlat
