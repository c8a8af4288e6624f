#pragma once

// Derived invariants of finitely presented groups: abelianizations with
// explicit coordinate maps, homomorphism verification by relator
// evaluation, normal cores, and group order by enumeration.

#include <cstddef>
#include <optional>
#include <vector>

#include "chlat/exact/smith.hpp"
#include "chlat/groups/coset_table.hpp"
#include "chlat/groups/presentation.hpp"
#include "chlat/groups/todd_coxeter.hpp"
#include "chlat/groups/word.hpp"
#include "chlat/perms/perm.hpp"

namespace chlat {

// Invariant factors of the abelianization (cokernel of the relator
// exponent matrix).
AbelianInvariants abelianization(const Presentation& pres);

// Abelianization together with coordinates: an element's class is read off
// from its generator exponent vector x as y_j = sum_i x_i V[i][j]; the
// first torsion_count coordinates are taken modulo the matching invariant
// factor and the remaining free_count are honest integers.
struct AbelianizationData {
  AbelianInvariants invariants;
  IntMat V;  // ngens x ngens unimodular coordinate change
  std::vector<Int> factors;  // per coordinate: d > 1 torsion, 0 free, 1 dead
  std::size_t torsion_count = 0;
  std::size_t free_count = 0;

  // Full coordinate vector of a word (length ngens, in column order of V:
  // dead coordinates first, then torsion, then free).
  std::vector<Int> coordinates(const Word& w) const;
  // Just the free coordinates (length free_count).
  std::vector<Int> free_coordinates(const Word& w) const;
};

AbelianizationData abelianization_data(const Presentation& pres);

// Evaluates a word in images of the generators.  Elem needs *, ==, and
// inverse().
template <typename Elem>
Elem evaluate_word(const Word& w, const std::vector<Elem>& images, const Elem& identity) {
  Elem acc = identity;
  for (int x : w) {
    std::size_t g = static_cast<std::size_t>((x > 0 ? x : -x) - 1);
    acc = x > 0 ? acc * images[g] : acc * images[g].inverse();
  }
  return acc;
}

// Checks that mapping the generators to the images defines a homomorphism:
// returns the first relator whose image is not the identity, or nothing if
// all relators hold.
template <typename Elem>
std::optional<Word> homomorphism_witness(const Presentation& pres,
                                         const std::vector<Elem>& images, const Elem& identity) {
  if (images.size() != static_cast<std::size_t>(pres.ngens()))
    throw std::invalid_argument("one image per generator required");
  for (const Word& r : pres.relators)
    if (!(evaluate_word(r, images, identity) == identity)) return r;
  return std::nullopt;
}

// The coset table of the normal core (the kernel of the action on cosets):
// rows are the elements of the finite image of the action, in breadth-first
// order from the identity.  Throws if the image exceeds max_order.
CosetTable normal_core_table(const CosetTable& table, std::size_t max_order = 5'000'000);

// Order of the finitely presented group by coset enumeration over the
// trivial subgroup; nullopt when enumeration gives up.
std::optional<std::size_t> group_order(const Presentation& pres, const TCLimits& limits = {});

}  // namespace chlat
