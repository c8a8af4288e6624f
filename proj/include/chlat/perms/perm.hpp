#pragma once

// Permutations of {0..n-1}.  Products compose left to right: (p * q)(x) =
// q(p(x)), matching word evaluation and coset-table actions.

#include <vector>

namespace chlat {

struct Perm {
  std::vector<int> map;

  static Perm identity(int n);
  int degree() const { return static_cast<int>(map.size()); }
  int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool operator==(const Perm& o) const { return map == o.map; }
  bool operator!=(const Perm& o) const { return map != o.map; }
  bool operator<(const Perm& o) const { return map < o.map; }
  bool is_identity() const;
  // smallest moved point, or -1 for the identity
  int first_moved() const;
};

}  // namespace chlat
