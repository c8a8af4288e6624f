#include <chlat/groups/given_gens.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace chlat {

namespace {

struct TaggedEntry {
  int target = -1;  // -1 = undefined
  Word tag;         // u_row * x = tag * u_target
};

class TaggedEnumeration {
 public:
  TaggedEnumeration(const Presentation& parent, const std::vector<Word>& sub_gens,
                    const TCLimits& limits)
      : parent_(parent), sub_gens_(sub_gens), limits_(limits), ngens_(parent.ngens()) {
    rows_.emplace_back(2 * size_t(ngens_));
    uf_parent_.push_back(0);
    uf_tag_.push_back(Word{});
  }

  void run() {
    bool changed = true;
    size_t passes = 0;
    while (changed) {
      if (++passes > 100000)
        throw std::runtime_error("presentation_on_generators: pass limit exceeded");
      changed = false;
      // Subgroup generator scans from coset 0 with required tag y_i.
      for (size_t i = 0; i < sub_gens_.size(); ++i) {
        Word target{int(i) + 1};
        changed |= scan_and_fill(0, sub_gens_[i], target);
        changed |= drain();
      }
      // Relator scans from every live coset.
      for (int a = 0; a < int(rows_.size()); ++a) {
        if (!alive(a)) continue;
        for (const Word& rel : parent_.relators) {
          changed |= scan_and_fill(a, rel, Word{});
          changed |= drain();
          if (!alive(a)) break;
        }
      }
      if (changed) continue;
      // Fill any column never touched by a scan (generator absent from all
      // relators and subgroup words beyond this point).
      for (int a = 0; a < int(rows_.size()) && !changed; ++a) {
        if (!alive(a)) continue;
        for (int g = 1; g <= ngens_ && !changed; ++g) {
          for (int sign : {+1, -1}) {
            if (entry(a, sign * g).target != -1) continue;
            define_coset(a, sign * g);
            drain();
            changed = true;
            break;
          }
        }
      }
    }
  }

  // Collect the subgroup presentation from the stable complete table.
  GivenGensResult result(std::vector<std::string> names) {
    std::vector<int> live;
    for (int a = 0; a < int(rows_.size()); ++a)
      if (alive(a)) live.push_back(a);

    std::set<Word> seen;
    std::vector<Word> relators;
    auto collect = [&](Word w) {
      w = cyclic_reduce(free_reduce(std::move(w)));
      if (w.empty()) return;
      Word canon = canonical_cyclic(w);
      if (seen.insert(canon).second) relators.push_back(std::move(w));
    };
    for (int a : live)
      for (const Word& rel : parent_.relators) collect(trace_tag(a, rel, Word{}));
    for (size_t i = 0; i < sub_gens_.size(); ++i)
      collect(trace_tag(find_root(0), sub_gens_[i], Word{int(i) + 1}));

    GivenGensResult out;
    if (names.empty())
      for (size_t i = 0; i < sub_gens_.size(); ++i) names.push_back("y" + std::to_string(i + 1));
    if (names.size() != sub_gens_.size())
      throw std::invalid_argument("presentation_on_generators: names/generators size mismatch");
    out.presentation.gen_names = std::move(names);
    out.presentation.relators = std::move(relators);
    out.presentation.validate();
    out.index = int(live.size());
    return out;
  }

 private:
  const Presentation& parent_;
  const std::vector<Word>& sub_gens_;
  TCLimits limits_;
  int ngens_;
  std::vector<std::vector<TaggedEntry>> rows_;
  std::vector<int> uf_parent_;
  std::vector<Word> uf_tag_;  // u_c = uf_tag_[c] * u_{uf_parent_[c]}
  std::deque<std::tuple<int, int, Word>> queue_;  // (a, b, t): u_a = t * u_b
  size_t live_count_ = 1;

  bool alive(int a) const { return uf_parent_[size_t(a)] == a; }

  static size_t column(int signed_gen) {
    int g = std::abs(signed_gen) - 1;
    return 2 * size_t(g) + (signed_gen > 0 ? 0 : 1);
  }

  // find with path compression, composing correction tags.
  std::pair<int, Word> find(int a) {
    if (uf_parent_[size_t(a)] == a) return {a, Word{}};
    auto [root, tag] = find(uf_parent_[size_t(a)]);
    uf_parent_[size_t(a)] = root;
    uf_tag_[size_t(a)] = free_reduce(concat(uf_tag_[size_t(a)], tag));
    return {root, uf_tag_[size_t(a)]};
  }
  int find_root(int a) { return find(a).first; }

  TaggedEntry& raw_entry(int a, int signed_gen) { return rows_[size_t(a)][column(signed_gen)]; }

  // Normalized view: target is a live root, tag adjusted.
  TaggedEntry entry(int a, int signed_gen) {
    TaggedEntry& e = raw_entry(a, signed_gen);
    if (e.target == -1) return e;
    auto [root, tag] = find(e.target);
    if (root != e.target) {
      e.target = root;
      e.tag = free_reduce(concat(e.tag, tag));
    }
    return e;
  }

  // Record u_a * x = t * u_b; a, b live roots. Writes both directions,
  // pushing a coincidence instead when a direction disagrees.
  bool set_entry(int a, int signed_gen, int b, const Word& t) {
    bool wrote = false;
    wrote |= set_dir(a, signed_gen, b, t);
    wrote |= set_dir(b, -signed_gen, a, inverse_word(t));
    return wrote;
  }

  bool set_dir(int a, int signed_gen, int b, Word t) {
    TaggedEntry cur = entry(a, signed_gen);
    t = free_reduce(std::move(t));
    if (cur.target == -1) {
      raw_entry(a, signed_gen) = TaggedEntry{b, std::move(t)};
      return true;
    }
    // u_a x = t u_b and u_a x = cur.tag u_{cur.target}  =>  u_b = t^{-1} cur.tag u_cur.
    if (cur.target != b || cur.tag != t)
      queue_.emplace_back(b, cur.target, free_reduce(concat(inverse_word(t), cur.tag)));
    return false;
  }

  void define_coset(int a, int signed_gen) {
    if (rows_.size() >= limits_.max_cosets)
      throw std::runtime_error(
          "presentation_on_generators: coset limit exceeded (infinite index?)");
    int b = int(rows_.size());
    rows_.emplace_back(2 * size_t(ngens_));
    uf_parent_.push_back(b);
    uf_tag_.push_back(Word{});
    ++live_count_;
    set_entry(a, signed_gen, b, Word{});
  }

  // Scan word w from live root a with required relation u_a w = tau u_a,
  // filling gaps. Returns true when anything was defined or deduced.
  bool scan_and_fill(int a, const Word& w, const Word& tau) {
    bool changed = false;
    size_t f = 0, b = w.size();
    int fc = a, bc = a;
    Word tagF, tagB;
    for (;;) {
      // Forward over defined entries.
      while (f < b) {
        TaggedEntry e = entry(fc, w[f]);
        if (e.target == -1) break;
        tagF = free_reduce(concat(tagF, e.tag));
        fc = e.target;
        ++f;
      }
      // Backward over defined entries.
      while (b > f) {
        TaggedEntry e = entry(bc, -w[b - 1]);
        if (e.target == -1) break;
        // u_e.target * w[b-1] = e.tag^{-1} * u_bc.
        tagB = free_reduce(concat(inverse_word(e.tag), tagB));
        bc = e.target;
        --b;
      }
      if (f == b) {
        // Fully traced: tagF u_fc (suffix part) ... require consistency.
        if (fc != bc)
          queue_.emplace_back(
              fc, bc, free_reduce(concat(inverse_word(tagF), concat(tau, inverse_word(tagB)))));
        // fc == bc with mismatched tags is a relator; collected in the
        // final pass, nothing to do here.
        return changed;
      }
      if (b == f + 1) {
        // One-letter gap: deduce with the forced (semantically correct) tag.
        Word t = free_reduce(concat(inverse_word(tagF), concat(tau, inverse_word(tagB))));
        set_entry(fc, w[f], bc, t);
        return true;
      }
      // Gap of two or more: define a coset for the next letter and continue.
      define_coset(fc, w[f]);
      changed = true;
      // Re-read the entry on the next loop iteration (it may have been
      // redirected by coincidences raised inside set_entry).
      if (!alive(fc)) fc = find_root(fc);
      if (!alive(bc)) bc = find_root(bc);
      if (!alive(a)) return changed;  // caller rescans later
    }
  }

  // Forward-only trace on the complete stable table; returns tau^{-1} * tags.
  Word trace_tag(int a, const Word& w, const Word& tau) {
    int c = a;
    Word tag;
    for (int letter : w) {
      TaggedEntry e = entry(c, letter);
      if (e.target == -1)
        throw std::logic_error("presentation_on_generators: incomplete table in final pass");
      tag = free_reduce(concat(tag, e.tag));
      c = e.target;
    }
    if (c != a) throw std::logic_error("presentation_on_generators: unstable table in final pass");
    return free_reduce(concat(inverse_word(tau), tag));
  }

  // Canonical form of a cyclic word up to rotation and inversion.
  static Word canonical_cyclic(const Word& w) {
    Word best;
    auto consider = [&](const Word& v) {
      for (size_t s = 0; s < v.size(); ++s) {
        Word rot(v.begin() + long(s), v.end());
        rot.insert(rot.end(), v.begin(), v.begin() + long(s));
        if (best.empty() || rot < best) best = rot;
      }
    };
    consider(w);
    consider(inverse_word(w));
    return best;
  }

  bool drain() {
    size_t steps = 0;
    bool merged = false;
    while (!queue_.empty()) {
      if (++steps > limits_.max_steps)
        throw std::runtime_error("presentation_on_generators: coincidence limit exceeded");
      auto [a, b, t] = queue_.front();
      queue_.pop_front();
      auto [ra, ta] = find(a);
      auto [rb, tb] = find(b);
      // u_ra = ta^{-1} t tb u_rb.
      if (ra == rb) continue;  // a mid-run relator; re-collected at the end
      Word link = free_reduce(concat(inverse_word(ta), concat(t, tb)));
      if (rb == 0) {
        // Keep coset 0 a root: merge ra's class under rb as usual.
      } else if (ra == 0) {
        std::swap(ra, rb);
        link = inverse_word(link);
      }
      uf_parent_[size_t(ra)] = rb;
      uf_tag_[size_t(ra)] = link;
      --live_count_;
      merged = true;
      // Move ra's entries onto rb: u_ra x = s u_g  =>  u_rb x = link^{-1} s u_g.
      auto row = std::move(rows_[size_t(ra)]);
      rows_[size_t(ra)].assign(2 * size_t(ngens_), TaggedEntry{});
      for (size_t col = 0; col < row.size(); ++col) {
        if (row[col].target == -1) continue;
        int g = int(col) / 2 + 1;
        int signed_gen = (col % 2 == 0) ? g : -g;
        auto [rg, tg] = find(row[col].target);
        set_entry(find_root(ra), signed_gen, rg,
                  free_reduce(concat(inverse_word(link), concat(row[col].tag, tg))));
      }
    }
    return merged;
  }
};

}  // namespace

GivenGensResult presentation_on_generators(const Presentation& parent,
                                           const std::vector<Word>& subgroup_gens,
                                           std::vector<std::string> names,
                                           const TCLimits& limits) {
  for (const Word& w : subgroup_gens)
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > parent.ngens())
        throw std::invalid_argument("presentation_on_generators: word letter out of range");
  TaggedEnumeration e(parent, subgroup_gens, limits);
  e.run();
  return e.result(std::move(names));
}

}  // namespace chlat
