#pragma once

// Coset enumeration over a finite presentation.  Two strategies share the
// data structures: relator-scanning with lookahead (the default), and a
// definition-by-definition strategy that propagates every deduction
// immediately.  Enumeration either proves the subgroup index finite and
// returns the completed, standardized coset table, or gives up when the
// configured limits are hit; giving up carries no information (the index
// may still be finite).

#include <cstddef>
#include <vector>

#include "chlat/groups/coset_table.hpp"
#include "chlat/groups/presentation.hpp"
#include "chlat/groups/word.hpp"

namespace chlat {

struct TCLimits {
  std::size_t max_cosets = 2'000'000;  // cap on simultaneously live cosets
  std::size_t max_steps = 10'000'000;  // cap on total coset definitions
  bool felsch = false;                 // immediate-deduction strategy
};

enum class TCStatus { success, undecided };

struct TCResult {
  TCStatus status = TCStatus::undecided;
  CosetTable table;         // standardized; valid only on success
  std::size_t index = 0;    // number of cosets on success
  std::size_t total_defined = 0;  // definitions made, for diagnostics

  bool ok() const { return status == TCStatus::success; }
};

TCResult todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                      const TCLimits& limits = {});

}  // namespace chlat
