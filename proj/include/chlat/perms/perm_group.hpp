#pragma once

// Stabilizer chains for finite permutation groups (deterministic
// Schreier-Sims): exact orders, membership tests, point stabilizers, coset
// transversals, and coset actions used to pull subgroups back through a
// homomorphism onto a permutation group.

#include <cstddef>
#include <utility>
#include <vector>

#include "chlat/exact/rat.hpp"
#include "chlat/groups/coset_table.hpp"
#include "chlat/perms/perm.hpp"

namespace chlat {

class PermGroup {
 public:
  // Group generated by gens, all of one degree.  degree is only consulted
  // when gens is empty (the trivial group needs to know its degree).
  explicit PermGroup(std::vector<Perm> gens, int degree = -1);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  Int order() const;
  bool is_trivial() const { return chain_.empty(); }
  bool contains(const Perm& p) const;

  // Base points of the stabilizer chain, outermost first.
  std::vector<int> base() const;

  // Orbit of a point under the whole group, in breadth-first discovery
  // order starting at the point itself.
  std::vector<int> orbit(int point) const;

  // Stabilizer of a point, as a group of the same degree.
  PermGroup point_stabilizer(int point) const;

  // Every element, breadth-first from the identity.  Throws if the order
  // exceeds cap.
  std::vector<Perm> elements(std::size_t cap = 100'000) const;

  // Representatives of the right cosets sub * r in *this, identity first,
  // in breadth-first discovery order.  Requires sub <= *this.
  std::vector<Perm> right_transversal(const PermGroup& sub, std::size_t max_cosets = 1'000'000) const;

 private:
  // Chain with a caller-chosen first base point (used by point_stabilizer).
  PermGroup(std::vector<Perm> gens, int degree, int forced_first_base);

  struct Level {
    int base = -1;
    std::vector<int> orbit;        // discovery order; orbit[0] == base
    std::vector<int> where;        // degree entries: index into orbit, or -1
    std::vector<Perm> transversal; // parallel to orbit: u with u(base) = pt
  };

  int degree_ = 0;
  std::vector<Perm> gens_;    // the generators as given (identities dropped)
  std::vector<Perm> sgens_;   // strong generators
  std::vector<std::size_t> slevel_;  // sgens_[i] fixes the first slevel_[i] base points
  std::vector<Level> chain_;

  void build(int forced_first_base);
  void rebuild_orbit(std::size_t l);
  void new_level(int base);
  // Left-multiplies through the chain from the given level on; returns the
  // residue and the level where sifting stopped (== chain_.size() when the
  // residue fixes every base point).
  std::pair<Perm, std::size_t> strip(Perm h, std::size_t from) const;
  void insert_residue(Perm res, std::size_t level);

  friend std::pair<std::vector<Perm>, CosetTable> enumerate_cosets(
      const std::vector<Perm>& gens, const PermGroup& sub, std::size_t max_cosets);
};

// Breadth-first enumeration of the right cosets of sub under the action of
// <gens> by right multiplication: returns one representative per coset
// (identity first) and the corresponding coset table over len(gens)
// generators, standardized by construction.  Requires every generator of
// sub to lie in <gens>.
std::pair<std::vector<Perm>, CosetTable> enumerate_cosets(const std::vector<Perm>& gens,
                                                          const PermGroup& sub,
                                                          std::size_t max_cosets);

// Coset table of <gen_images> acting on the right cosets of sub (row 0 is
// sub itself).  This is the table of the preimage of sub under any
// homomorphism sending abstract generators to gen_images.
CosetTable coset_action(const std::vector<Perm>& gen_images, const PermGroup& sub,
                        std::size_t max_cosets = 1'000'000);

// True when s meets every conjugate r * <isotropy_gens> * r^-1, r over the
// given right-coset representatives, only in the identity.  The isotropy
// generators must generate a group of at most cap elements.
bool conj_intersection_trivial(const PermGroup& s, const std::vector<Perm>& isotropy_gens,
                               const std::vector<Perm>& transversal, std::size_t cap = 100'000);

}  // namespace chlat
