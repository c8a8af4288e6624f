#pragma once

// Subgroup presentations from coset tables: Schreier generators over a
// breadth-first transversal, Reidemeister rewriting of the parent relators
// at every coset, then Tietze simplification.  The result keeps enough
// bookkeeping to express its generators as parent words and to rewrite any
// element of the subgroup (given as a parent word fixing coset 0) as a word
// in the simplified generators.

#include <vector>

#include "chlat/groups/coset_table.hpp"
#include "chlat/groups/presentation.hpp"
#include "chlat/groups/word.hpp"

namespace chlat {

struct SubgroupPresentation {
  Presentation pres;               // simplified subgroup presentation
  std::vector<Word> gen_in_parent; // each generator of pres as a parent word

  // Rewrites a parent word that fixes coset 0 into the generators of pres.
  // Throws std::invalid_argument if the word moves coset 0.
  Word rewrite(const Word& parent_word) const;

  // internals, kept for rewriting
  CosetTable table;
  std::vector<std::vector<int>> schreier_id;  // [coset][gen-1] -> 1-based id, 0 = tree edge
  std::vector<Word> schreier_to_current;      // original Schreier gen -> word in pres gens
};

struct SimplifyOptions {
  bool enabled = true;
  // Stop eliminating once total relator length would exceed
  // max(growth_factor * initial, floor).
  std::size_t growth_factor = 4;
  std::size_t growth_floor = 4000;
};

SubgroupPresentation reidemeister_schreier(const Presentation& parent, const CosetTable& table,
                                           const SimplifyOptions& options = {});

}  // namespace chlat
