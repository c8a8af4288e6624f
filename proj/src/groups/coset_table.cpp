#include "chlat/groups/coset_table.hpp"

#include <stdexcept>

namespace chlat {

int CosetTable::act_word(int coset, const Word& w) const {
  int c = coset;
  for (int x : w) {
    c = act(c, x);
    if (c < 0) return -1;
  }
  return c;
}

bool CosetTable::complete() const {
  for (int e : tab)
    if (e < 0) return false;
  return true;
}

CosetTable CosetTable::standardized_from(int base) const {
  if (!complete()) throw std::logic_error("standardized_from() needs a complete table");
  int n = size();
  if (base < 0 || base >= n) throw std::logic_error("standardization base out of range");
  std::vector<int> old_to_new(static_cast<size_t>(n), -1);
  std::vector<int> new_to_old;
  new_to_old.reserve(static_cast<size_t>(n));
  old_to_new[static_cast<size_t>(base)] = 0;
  new_to_old.push_back(base);
  for (int i = 0; i < static_cast<int>(new_to_old.size()); ++i) {
    int old = new_to_old[static_cast<size_t>(i)];
    for (int col = 0; col < width(); ++col) {
      int t = entry(old, col);
      if (old_to_new[static_cast<size_t>(t)] < 0) {
        old_to_new[static_cast<size_t>(t)] = static_cast<int>(new_to_old.size());
        new_to_old.push_back(t);
      }
    }
  }
  if (static_cast<int>(new_to_old.size()) != n)
    throw std::logic_error("coset table action is not transitive");
  CosetTable out(ngens, n);
  for (int c = 0; c < n; ++c)
    for (int col = 0; col < width(); ++col)
      out.entry(c, col) = old_to_new[static_cast<size_t>(
          entry(new_to_old[static_cast<size_t>(c)], col))];
  return out;
}

std::vector<std::vector<int>> CosetTable::permutation_rep() const {
  if (!complete()) throw std::logic_error("permutation_rep() needs a complete table");
  std::vector<std::vector<int>> perms(static_cast<size_t>(ngens));
  for (int g = 1; g <= ngens; ++g) {
    auto& p = perms[static_cast<size_t>(g - 1)];
    p.resize(static_cast<size_t>(size()));
    for (int c = 0; c < size(); ++c) p[static_cast<size_t>(c)] = act(c, g);
  }
  return perms;
}

void CosetTable::validate(const Presentation& pres, const std::vector<Word>& subgroup_gens) const {
  if (pres.ngens() != ngens) throw std::logic_error("coset table generator count mismatch");
  int n = size();
  if (n == 0) throw std::logic_error("empty coset table");
  for (int c = 0; c < n; ++c)
    for (int col = 0; col < width(); ++col) {
      int t = entry(c, col);
      if (t < 0 || t >= n) throw std::logic_error("coset table entry out of range");
      if (entry(t, inverse_column(col)) != c)
        throw std::logic_error("coset table columns are not mutually inverse");
    }
  for (const Word& r : pres.relators)
    for (int c = 0; c < n; ++c)
      if (act_word(c, r) != c)
        throw std::logic_error("relator " + pres.print(r) + " does not fix coset " +
                               std::to_string(c));
  for (const Word& h : subgroup_gens)
    if (act_word(0, h) != 0)
      throw std::logic_error("subgroup generator " + pres.print(h) + " does not fix coset 0");
  // transitivity
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int col = 0; col < width(); ++col) {
      int t = entry(c, col);
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        ++reached;
        stack.push_back(t);
      }
    }
  }
  if (reached != n) throw std::logic_error("coset table action is not transitive");
}

std::string CosetTable::to_string() const {
  std::string out;
  for (int c = 0; c < size(); ++c) {
    out += std::to_string(c) + ":";
    for (int col = 0; col < width(); ++col) out += " " + std::to_string(entry(c, col));
    out += "\n";
  }
  return out;
}

}  // namespace chlat
