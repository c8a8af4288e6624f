#pragma once

// Words in a free group: vectors of nonzero signed generator indices,
// 1-based (+k is generator k, -k its inverse).

#include <string>
#include <vector>

namespace chlat {

using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);  // freely reduces, then trims conjugating ends
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word word_power(const Word& w, int n);
// u w u^-1
Word word_conjugate(const Word& w, const Word& u);

// The braid relation of length n on generators a, b as a relator:
//   n even: (ab)^{n/2} ((ba)^{n/2})^{-1}
//   n odd:  (ab)^{(n-1)/2} a ((ba)^{(n-1)/2} b)^{-1}
// (i.e. "aba... = bab..." with n letters on each side).
Word braid_relator(int n, int a, int b);

// Signed exponent sums per generator (index 0 = generator 1).
std::vector<long> exponent_vector(const Word& w, int ngens);

// Text form using the given generator names, e.g. "r1 j^-1 (r2 j)^2".
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// Parse a word: names, optional ^<int>, parenthesised groups with optional
// ^<int>, separated by spaces or '*'. Throws std::invalid_argument on
// unknown names or syntax errors. "1" denotes the empty word.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

}  // namespace chlat
