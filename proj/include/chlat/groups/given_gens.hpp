#pragma once

// Presentation of a finite-index subgroup on a GIVEN generating set.
//
// Reidemeister-Schreier presents a subgroup on Schreier generators; here the
// caller supplies words w_1..w_m generating H = <w_1,...,w_m> <= G and wants
// a presentation of H on abstract symbols y_1..y_m with y_i |-> w_i.
//
// Method: a tagged (modified) Todd-Coxeter enumeration.  Every coset-table
// entry (a, x) -> b carries a tag word t in F(y) whose image in H satisfies
//   u_a * x = t * u_b   in G,
// where u_c is the (implicit) representative of coset c and u_0 is empty.
// Definitions carry the empty tag, deductions carry the tag forced by the
// scan, and coincidences propagate correction tags, so every stored tag is
// semantically correct by construction.  Once the table is complete and
// stable, scanning a defining relator of G from any coset yields a tag
// product that maps to 1 in G, hence is a relator of H; scanning w_i from
// coset 0 yields a word T_i with y_i^{-1} T_i a relator.  The standard
// rewriting argument shows these relators generate the kernel of
// F(y) ->> H, so together they present H on y_1..y_m.

#include <chlat/groups/presentation.hpp>
#include <chlat/groups/todd_coxeter.hpp>
#include <chlat/groups/word.hpp>

#include <string>
#include <vector>

namespace chlat {

struct GivenGensResult {
  Presentation presentation;  // on the given generators, in caller order
  int index = 0;              // index of the subgroup in the parent
};

// names supplies the generator names of the result (size must match
// subgroup_gens; empty means y1, y2, ...).  Throws std::runtime_error when
// the enumeration exceeds the limits (e.g. infinite index).
GivenGensResult presentation_on_generators(const Presentation& parent,
                                           const std::vector<Word>& subgroup_gens,
                                           std::vector<std::string> names = {},
                                           const TCLimits& limits = {});

}  // namespace chlat
