#pragma once

// Coset tables: the permutation action of group generators on right cosets
// of a subgroup, with coset 0 the subgroup itself.  Rows are cosets, columns
// alternate generator / inverse: column 2(g-1) is generator g, column
// 2(g-1)+1 is its inverse.  Entries are coset numbers, -1 for undefined.

#include <string>
#include <vector>

#include "chlat/groups/presentation.hpp"
#include "chlat/groups/word.hpp"

namespace chlat {

struct CosetTable {
  int ngens = 0;
  std::vector<int> tab;  // row-major, size() == size * 2*ngens

  CosetTable() = default;
  CosetTable(int ngens_, int ncosets) : ngens(ngens_) {
    tab.assign(static_cast<size_t>(ncosets) * width(), -1);
  }

  int width() const { return 2 * ngens; }
  int size() const { return ngens == 0 ? 0 : static_cast<int>(tab.size()) / width(); }

  static int column(int signed_gen) {
    int g = signed_gen > 0 ? signed_gen : -signed_gen;
    return 2 * (g - 1) + (signed_gen > 0 ? 0 : 1);
  }
  static int inverse_column(int col) { return col ^ 1; }

  int& entry(int coset, int col) { return tab[static_cast<size_t>(coset) * width() + col]; }
  int entry(int coset, int col) const { return tab[static_cast<size_t>(coset) * width() + col]; }

  // Image of a coset under a signed generator; -1 if undefined.
  int act(int coset, int signed_gen) const { return entry(coset, column(signed_gen)); }
  // Image under a word; -1 if any step is undefined.
  int act_word(int coset, const Word& w) const;

  bool complete() const;

  // Renumbers cosets in breadth-first order from coset 0, visiting columns
  // left to right.  Requires a complete table; the result is the canonical
  // numbering used for table comparison.
  CosetTable standardized() const { return standardized_from(0); }

  // Same renumbering but rooted at another coset: the table of the
  // conjugate subgroup stabilizing that coset.
  CosetTable standardized_from(int base) const;

  // The flat entries, for lexicographic comparison of standardized tables.
  const std::vector<int>& flat() const { return tab; }

  // Permutation images of the generators (complete tables only):
  // perms[g-1][c] = c . g.
  std::vector<std::vector<int>> permutation_rep() const;

  // Checks a complete table: entries in range, mutually inverse columns,
  // every relator fixes every coset, every subgroup generator word fixes
  // coset 0, and the action is transitive.  Throws std::logic_error with a
  // description on violation.
  void validate(const Presentation& pres, const std::vector<Word>& subgroup_gens) const;

  std::string to_string() const;
};

}  // namespace chlat
