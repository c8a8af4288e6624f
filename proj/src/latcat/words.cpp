#include <chlat/latcat/words.hpp>

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace chlat::latcat {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int ngens;

  explicit Parser(const std::string& text, int n) : s(text), ngens(n) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("word parse error at position " + std::to_string(pos) + " in \"" +
                                s + "\": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])) != 0) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  long read_long() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
    if (start == pos) fail("expected digits");
    long v = std::stol(s.substr(start, pos - start));
    return neg ? -v : v;
  }

  // atom := digit | '(' word ')' | 'br' N '(' word ',' word ')'
  // postfix: any number of ' and ^exp in sequence.
  Word parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("expected an atom");
    Word w;
    if (s[pos] == '(') {
      ++pos;
      w = parse_word_until(")");
      if (!peek_is(')')) fail("missing ')'");
      ++pos;
    } else if (s.compare(pos, 2, "br") == 0) {
      pos += 2;
      long n = read_long();
      if (n < 2) fail("braid length must be >= 2");
      if (!peek_is('(')) fail("expected '(' after br");
      ++pos;
      Word u = parse_word_until(",)");
      if (!peek_is(',')) fail("expected ',' in br(...)");
      ++pos;
      Word v = parse_word_until(",)");
      if (!peek_is(')')) fail("missing ')' in br(...)");
      ++pos;
      w = braid_relator_words(int(n), u, v);
    } else if (std::isdigit(static_cast<unsigned char>(s[pos])) != 0) {
      int g = s[pos] - '0';
      if (g < 1 || g > ngens) fail("generator digit out of range");
      ++pos;
      w = Word{g};
    } else {
      fail(std::string("unexpected character '") + s[pos] + "'");
    }
    // Postfix operators.
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '\'') {
        ++pos;
        w = inverse_word(w);
      } else if (pos < s.size() && s[pos] == '^') {
        ++pos;
        long e;
        if (peek_is('{')) {
          ++pos;
          e = read_long();
          if (!peek_is('}')) fail("missing '}'");
          ++pos;
        } else {
          e = read_long();
        }
        if (e < -1000000 || e > 1000000) fail("exponent out of range");
        w = word_power(w, int(e));
      } else {
        break;
      }
    }
    return w;
  }

  Word parse_word_until(const std::string& stoppers) {
    Word w;
    for (;;) {
      skip_ws();
      if (pos >= s.size() || stoppers.find(s[pos]) != std::string::npos) break;
      Word a = parse_atom();
      w.insert(w.end(), a.begin(), a.end());
    }
    return w;
  }
};

}  // namespace

Word parse_digit_word(const std::string& text, int ngens) {
  if (ngens < 1 || ngens > 9)
    throw std::invalid_argument("parse_digit_word: ngens must be between 1 and 9");
  Parser p(text, ngens);
  Word w = p.parse_word_until("");
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return w;
}

std::string digit_word_to_string(const Word& w) {
  if (w.empty()) return "()";
  std::string out;
  for (int letter : w) {
    out += char('0' + std::abs(letter));
    if (letter < 0) out += '\'';
  }
  return out;
}

Word braid_relator_words(int n, const Word& u, const Word& v) {
  Word lhs, rhs;
  for (int i = 0; i < n; ++i) {
    const Word& a = (i % 2 == 0) ? u : v;
    const Word& b = (i % 2 == 0) ? v : u;
    lhs.insert(lhs.end(), a.begin(), a.end());
    rhs.insert(rhs.end(), b.begin(), b.end());
  }
  return free_reduce(concat(lhs, inverse_word(rhs)));
}

}  // namespace chlat::latcat
