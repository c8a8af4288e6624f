#include "chlat/groups/word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace chlat {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("word letter must be nonzero");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word word_power(const Word& w, int n) {
  Word base = n < 0 ? inverse_word(w) : w;
  int k = n < 0 ? -n : n;
  Word out;
  out.reserve(base.size() * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word word_conjugate(const Word& w, const Word& u) {
  return concat(concat(u, w), inverse_word(u));
}

Word braid_relator(int n, int a, int b) {
  if (n < 2) throw std::invalid_argument("braid relator needs length >= 2");
  auto alternating = [](int first, int second, int len) {
    Word w;
    w.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? first : second);
    return w;
  };
  Word lhs = alternating(a, b, n);   // aba...
  Word rhs = alternating(b, a, n);   // bab...
  return free_reduce(concat(lhs, inverse_word(rhs)));
}

std::vector<long> exponent_vector(const Word& w, int ngens) {
  std::vector<long> e(static_cast<size_t>(ngens), 0);
  for (int x : w) {
    int g = x > 0 ? x : -x;
    if (g < 1 || g > ngens) throw std::invalid_argument("word letter out of range");
    e[static_cast<size_t>(g - 1)] += x > 0 ? 1 : -1;
  }
  return e;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int g = w[i] > 0 ? w[i] : -w[i];
    if (g < 1 || static_cast<size_t>(g) > names.size())
      throw std::invalid_argument("word letter out of range");
    long exp = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += names[static_cast<size_t>(g - 1)];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& names;

  void skip_ws() {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*'))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("word parse error at position " + std::to_string(pos) + ": " +
                                msg + " in \"" + s + "\"");
  }

  long parse_exponent() {
    // caller consumed '^'
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer exponent");
    return std::strtol(s.substr(start, pos - start).c_str(), nullptr, 10);
  }

  Word parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("expected atom");
    Word base;
    if (s[pos] == '(') {
      ++pos;
      base = parse_sequence(true);
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
    } else if (s[pos] == '1' &&
               (pos + 1 >= s.size() ||
                !(std::isalnum(static_cast<unsigned char>(s[pos + 1])) || s[pos + 1] == '_'))) {
      ++pos;  // the identity
    } else {
      // longest-match generator name
      size_t best = 0;
      int gen = 0;
      for (size_t g = 0; g < names.size(); ++g) {
        const std::string& n = names[g];
        if (n.size() > best && s.compare(pos, n.size(), n) == 0) {
          best = n.size();
          gen = static_cast<int>(g) + 1;
        }
      }
      if (gen == 0) fail("unknown generator name");
      pos += best;
      base.push_back(gen);
    }
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      long e = parse_exponent();
      if (e < -1000000 || e > 1000000) fail("exponent out of range");
      base = word_power(base, static_cast<int>(e));
    }
    return base;
  }

  Word parse_sequence(bool inside_parens) {
    Word out;
    while (true) {
      skip_ws();
      if (pos >= s.size() || (inside_parens && s[pos] == ')')) break;
      Word a = parse_atom();
      out.insert(out.end(), a.begin(), a.end());
    }
    return out;
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Parser p{text, 0, names};
  Word w = p.parse_sequence(false);
  if (!p.at_end()) p.fail("trailing input");
  return free_reduce(w);
}

}  // namespace chlat
