#include "chlat/groups/presentation.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace chlat {

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gen_names.size(); ++i)
    if (gen_names[i] == name) return static_cast<int>(i) + 1;
  throw std::invalid_argument("unknown generator: " + name);
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const std::string& n : gen_names) {
    if (n.empty()) throw std::invalid_argument("empty generator name");
    if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
      throw std::invalid_argument("generator name must start with a letter: " + n);
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("bad character in generator name: " + n);
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name: " + n);
  }
  for (const Word& r : relators)
    for (int x : r) {
      int g = x > 0 ? x : -x;
      if (g < 1 || g > ngens())
        throw std::invalid_argument("relator letter out of range in " + to_string());
    }
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (size_t i = 0; i < gen_names.size(); ++i) {
    if (i) out += ", ";
    out += gen_names[i];
  }
  out += " | ";
  for (size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += print(relators[i]);
  }
  out += " >";
  return out;
}

Presentation make_presentation(const std::vector<std::string>& gen_names,
                               const std::vector<std::string>& relator_texts) {
  Presentation p;
  p.gen_names = gen_names;
  for (const std::string& t : relator_texts) p.add_relator(t);
  p.validate();
  return p;
}

}  // namespace chlat
