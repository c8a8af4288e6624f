#pragma once

// Congruence reduction: map a matrix group over a number field to its image
// modulo a prime, realized directly as a permutation group on the projective
// plane over the residue field. Acting on all q^2+q+1 projective points (not
// only the isotropic ones) quotients by scalars and is faithful for the
// projectivized matrix group.
//
// Points are row vectors normalized so the first nonzero coordinate is 1;
// matrices act on the right (X -> X A), which makes the generator map a
// homomorphism for left-to-right word evaluation.

#include <chlat/cxhyp/hermitian.hpp>
#include <chlat/exact/residue_field.hpp>
#include <chlat/groups/group_ops.hpp>
#include <chlat/perms/perm_group.hpp>

#include <vector>

namespace chlat {

struct CongruenceImage {
  ResidueFieldPtr rf;
  std::size_t npoints = 0;        // q^2 + q + 1
  std::vector<Perm> gen_images;   // projection map, one permutation per generator
  PermGroup group;

  // Image of a word in the parent generators (signed 1-based letters).
  Perm image_of(const Word& w) const {
    return evaluate_word(w, gen_images, Perm::identity(static_cast<int>(npoints)));
  }
};

// Throws if an entry is not p-regular (denominator divisible by p), if a
// reduced generator is singular mod p, or if the projective plane would
// exceed max_points.
CongruenceImage congruence_image(const std::vector<ProjUnitaryMatrix>& gens,
                                 const ResidueFieldPtr& rf,
                                 std::size_t max_points = 2'000'000);

}  // namespace chlat
