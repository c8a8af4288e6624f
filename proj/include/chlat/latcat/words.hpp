#pragma once

// Compact digit notation for words over a presentation's generators, as used
// throughout the catalog file:
//
//   - digits 1..9 name generators by position (1 = first generator),
//   - a postfix apostrophe inverts the preceding atom: 2' = g2^{-1},
//   - ^ raises the preceding atom to a power; the exponent is a greedy digit
//     string, optionally negative or wrapped in braces: (12)^3, 1^{10}, 2^-2,
//   - parentheses group, and a postfix ' or ^ applies to the whole group,
//   - brN(u,v) expands to the braid relator of length N on the words u and v
//     (prod of N alternating u,v times the inverse of N alternating v,u),
//   - whitespace is ignored.
//
// Examples: "12'3" = g1 g2^{-1} g3;  "(112)^2" = (g1 g1 g2)^2;
//           "br4(1,23'2')" = braid relator on g1 and g2 g3^{-1} g2^{-1}.

#include <chlat/groups/word.hpp>

#include <string>

namespace chlat::latcat {

// Parses digit notation; ngens bounds the admissible digits (1..ngens).
// Throws std::invalid_argument with a position diagnostic on bad input.
Word parse_digit_word(const std::string& text, int ngens);

// Renders a word in digit notation (inverses as apostrophes, no powers).
std::string digit_word_to_string(const Word& w);

// Braid relator of length n on arbitrary words: (uvuv...) (vuvu...)^{-1},
// each factor of length n.
Word braid_relator_words(int n, const Word& u, const Word& v);

}  // namespace chlat::latcat
