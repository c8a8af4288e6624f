#include "chlat/perms/perm.hpp"

#include <stdexcept>

namespace chlat {

Perm Perm::identity(int n) {
  Perm p;
  p.map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.map[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (map.size() != o.map.size()) throw std::invalid_argument("permutation degree mismatch");
  Perm out;
  out.map.resize(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    out.map[i] = o.map[static_cast<std::size_t>(map[i])];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.map.resize(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    out.map[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] != static_cast<int>(i)) return false;
  return true;
}

int Perm::first_moved() const {
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] != static_cast<int>(i)) return static_cast<int>(i);
  return -1;
}

}  // namespace chlat
