#pragma once

// Exhaustive search for the subgroups of index at most a bound, one
// representative per conjugacy class, as standardized coset tables sorted
// by (index, table).  Backtracks over partial coset tables: branches fill
// the first undefined entry, relator scans force deductions, and any forced
// collision of cosets prunes the branch.  A completed table is kept only
// when its base-0 numbering is lexicographically minimal over all choices
// of base coset, which picks exactly one subgroup per conjugacy class.

#include <cstddef>
#include <vector>

#include "chlat/groups/coset_table.hpp"
#include "chlat/groups/presentation.hpp"

namespace chlat {

struct LowIndexOptions {
  std::size_t max_nodes = 10'000'000;  // search tree budget; overrun throws
};

std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int max_index,
                                            const LowIndexOptions& options = {});

}  // namespace chlat
