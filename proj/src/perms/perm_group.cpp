#include "chlat/perms/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace chlat {

// ---------------------------------------------------------------------------
// Stabilizer chain construction (deterministic Schreier-Sims).
//
// Invariants, with base points b_0, b_1, ... and H_l = <strong generators
// whose level is >= l>:
//   * a strong generator at level l fixes b_0..b_{l-1} and moves b_l,
//   * chain_[l] holds the orbit of b_l under H_l with a transversal
//     (u(b_l) = point for each orbit point),
//   * after build() finishes, every Schreier generator of every level sifts
//     to the identity through the rest of the chain, which is exactly the
//     condition for H_{l+1} = Stab_{H_l}(b_l) at every level.  Then order()
//     is the product of the orbit sizes and strip() decides membership.
// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::vector<Perm> gens, int degree) {
  degree_ = degree;
  for (const Perm& g : gens) {
    if (degree_ < 0) degree_ = g.degree();
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
  if (degree_ < 0) throw std::invalid_argument("the trivial group needs an explicit degree");
  build(-1);
}

PermGroup::PermGroup(std::vector<Perm> gens, int degree, int forced_first_base) {
  degree_ = degree;
  for (const Perm& g : gens) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
  build(forced_first_base);
}

void PermGroup::new_level(int base) {
  Level lv;
  lv.base = base;
  chain_.push_back(std::move(lv));
  rebuild_orbit(chain_.size() - 1);
}

void PermGroup::rebuild_orbit(std::size_t l) {
  Level& lv = chain_[l];
  lv.orbit.assign(1, lv.base);
  lv.where.assign(static_cast<std::size_t>(degree_), -1);
  lv.where[static_cast<std::size_t>(lv.base)] = 0;
  lv.transversal.assign(1, Perm::identity(degree_));
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    int pt = lv.orbit[oi];
    for (std::size_t gi = 0; gi < sgens_.size(); ++gi) {
      if (slevel_[gi] < l) continue;
      int q = sgens_[gi](pt);
      if (lv.where[static_cast<std::size_t>(q)] < 0) {
        lv.where[static_cast<std::size_t>(q)] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(lv.transversal[oi] * sgens_[gi]);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm h, std::size_t from) const {
  for (std::size_t l = from; l < chain_.size(); ++l) {
    const Level& lv = chain_[l];
    int q = h(lv.base);
    int pos = lv.where[static_cast<std::size_t>(q)];
    if (pos < 0) return {std::move(h), l};
    h = h * lv.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return {std::move(h), chain_.size()};
}

void PermGroup::insert_residue(Perm res, std::size_t level) {
  if (level == chain_.size()) new_level(res.first_moved());
  sgens_.push_back(std::move(res));
  slevel_.push_back(level);
  // A generator entering level j joins every H_l with l <= j, so all those
  // orbits may grow.
  for (std::size_t l = 0; l <= level; ++l) rebuild_orbit(l);
}

void PermGroup::build(int forced_first_base) {
  if (forced_first_base >= 0) {
    if (forced_first_base >= degree_) throw std::invalid_argument("base point out of range");
    new_level(forced_first_base);
  }
  for (const Perm& g : gens_) {
    auto [res, l] = strip(g, 0);
    if (!res.is_identity()) insert_residue(std::move(res), l);
  }
  // Keep checking Schreier generators and absorbing the residues until one
  // full pass adds nothing; that clean pass is the correctness certificate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < chain_.size(); ++l) {
      for (std::size_t oi = 0; oi < chain_[l].orbit.size(); ++oi) {
        for (std::size_t gi = 0; gi < sgens_.size(); ++gi) {
          if (slevel_[gi] < l) continue;
          int pt = chain_[l].orbit[oi];
          int q = sgens_[gi](pt);
          int qpos = chain_[l].where[static_cast<std::size_t>(q)];
          Perm sg = chain_[l].transversal[oi] * sgens_[gi] *
                    chain_[l].transversal[static_cast<std::size_t>(qpos)].inverse();
          auto [res, j] = strip(std::move(sg), l + 1);
          if (!res.is_identity()) {
            insert_residue(std::move(res), j);
            changed = true;
          }
        }
      }
    }
  }
}

Int PermGroup::order() const {
  Int o = 1;
  for (const Level& lv : chain_) o *= static_cast<unsigned long>(lv.orbit.size());
  return o;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  return strip(p, 0).first.is_identity();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const Level& lv : chain_) b.push_back(lv.base);
  return b;
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("point out of range");
  std::vector<int> orb(1, point);
  std::vector<int> seen(static_cast<std::size_t>(degree_), 0);
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t oi = 0; oi < orb.size(); ++oi)
    for (const Perm& g : gens_) {
      int q = g(orb[oi]);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = 1;
        orb.push_back(q);
      }
    }
  return orb;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("point out of range");
  PermGroup rebased(sgens_, degree_, point);
  std::vector<Perm> stab_gens;
  for (std::size_t i = 0; i < rebased.sgens_.size(); ++i)
    if (rebased.slevel_[i] >= 1) stab_gens.push_back(rebased.sgens_[i]);
  return PermGroup(std::move(stab_gens), degree_);
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order() > static_cast<unsigned long>(cap))
    throw std::runtime_error("group too large to enumerate");
  std::vector<Perm> out(1, Perm::identity(degree_));
  std::set<Perm> seen(out.begin(), out.end());
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    Perm cur = out[qi];  // copy: out may reallocate
    for (const Perm& g : gens_) {
      Perm next = cur * g;
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<Perm> PermGroup::right_transversal(const PermGroup& sub, std::size_t max_cosets) const {
  if (sub.degree() != degree_) throw std::invalid_argument("degree mismatch");
  for (const Perm& g : sub.generators())
    if (!contains(g)) throw std::invalid_argument("not a subgroup");
  auto [reps, table] = enumerate_cosets(gens_, sub, max_cosets);
  if (Int(static_cast<unsigned long>(reps.size())) * sub.order() != order())
    throw std::logic_error("coset count does not match the orders");
  return reps;
}

// ---------------------------------------------------------------------------
// Coset enumeration by explicit representatives.  Cosets sub * y are
// deduplicated with exact membership tests y * r^-1 in sub, bucketed by a
// coset invariant (the minimum of y over the orbit of sub's first base
// point, which every element of sub * y shares).
// ---------------------------------------------------------------------------

std::pair<std::vector<Perm>, CosetTable> enumerate_cosets(const std::vector<Perm>& gens,
                                                          const PermGroup& sub,
                                                          std::size_t max_cosets) {
  int deg = sub.degree();
  for (const Perm& g : gens)
    if (g.degree() != deg) throw std::invalid_argument("degree mismatch");

  std::vector<int> key_orbit;
  if (sub.is_trivial())
    key_orbit.assign(1, 0);
  else
    key_orbit = sub.orbit(sub.base()[0]);
  auto coset_key = [&](const Perm& y) {
    int m = deg;
    for (int p : key_orbit) m = std::min(m, y(p));
    return m;
  };

  std::vector<Perm> reps(1, Perm::identity(deg));
  std::vector<Perm> rep_invs(1, Perm::identity(deg));
  std::unordered_map<int, std::vector<int>> buckets;
  buckets[coset_key(reps[0])].push_back(0);

  auto find_or_insert = [&](const Perm& y) {
    std::vector<int>& bucket = buckets[coset_key(y)];
    for (int i : bucket)
      if (sub.contains(y * rep_invs[static_cast<std::size_t>(i)])) return i;
    if (reps.size() >= max_cosets) throw std::runtime_error("coset enumeration exceeds the cap");
    int id = static_cast<int>(reps.size());
    reps.push_back(y);
    rep_invs.push_back(y.inverse());
    bucket.push_back(id);
    return id;
  };

  int ng = static_cast<int>(gens.size());
  std::vector<Perm> gen_invs;
  for (const Perm& g : gens) gen_invs.push_back(g.inverse());

  // Discover cosets in column order (+1, -1, +2, -2, ...) so the table is
  // standardized by construction, then read the links back off.
  std::vector<std::vector<int>> links;  // per row, width entries
  for (std::size_t r = 0; r < reps.size(); ++r) {
    std::vector<int> row(static_cast<std::size_t>(2 * ng), -1);
    for (int g = 0; g < ng; ++g) {
      row[static_cast<std::size_t>(2 * g)] = find_or_insert(reps[r] * gens[static_cast<std::size_t>(g)]);
      row[static_cast<std::size_t>(2 * g + 1)] =
          find_or_insert(reps[r] * gen_invs[static_cast<std::size_t>(g)]);
    }
    links.push_back(std::move(row));
  }

  CosetTable table(ng, static_cast<int>(reps.size()));
  for (std::size_t r = 0; r < links.size(); ++r)
    for (int c = 0; c < 2 * ng; ++c)
      table.entry(static_cast<int>(r), c) = links[r][static_cast<std::size_t>(c)];
  return {std::move(reps), std::move(table)};
}

CosetTable coset_action(const std::vector<Perm>& gen_images, const PermGroup& sub,
                        std::size_t max_cosets) {
  return enumerate_cosets(gen_images, sub, max_cosets).second;
}

bool conj_intersection_trivial(const PermGroup& s, const std::vector<Perm>& isotropy_gens,
                               const std::vector<Perm>& transversal, std::size_t cap) {
  if (isotropy_gens.empty()) return true;
  PermGroup iso(isotropy_gens);
  if (iso.degree() != s.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<Perm> iso_elements = iso.elements(cap);
  for (const Perm& r : transversal) {
    Perm r_inv = r.inverse();
    for (const Perm& u : iso_elements) {
      if (u.is_identity()) continue;
      if (s.contains(r * u * r_inv)) return false;
    }
  }
  return true;
}

}  // namespace chlat
