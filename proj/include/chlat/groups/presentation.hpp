#pragma once

// Finite presentations: generator names plus relator words.

#include <string>
#include <vector>

#include "chlat/groups/word.hpp"

namespace chlat {

struct Presentation {
  std::vector<std::string> gen_names;
  std::vector<Word> relators;

  int ngens() const { return static_cast<int>(gen_names.size()); }

  // Index (1-based) of a named generator; throws if absent.
  int gen_index(const std::string& name) const;

  Word parse(const std::string& text) const { return parse_word(text, gen_names); }
  std::string print(const Word& w) const { return word_to_string(w, gen_names); }

  void add_relator(const std::string& text) { relators.push_back(parse(text)); }

  // Checks generator names are distinct nonempty identifiers and all relator
  // letters are in range. Throws std::invalid_argument on violation.
  void validate() const;

  std::string to_string() const;
};

// Convenience constructor: names plus relator strings.
Presentation make_presentation(const std::vector<std::string>& gen_names,
                               const std::vector<std::string>& relator_texts);

}  // namespace chlat
