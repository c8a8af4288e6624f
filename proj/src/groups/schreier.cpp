#include "chlat/groups/schreier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chlat {

namespace {

int letter_of_column(int col) { return col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1); }

int count_occurrences(const Word& w, int g) {
  int n = 0;
  for (int x : w)
    if (x == g || x == -g) ++n;
  return n;
}

// Replaces every occurrence of +-g by expr^{+-1} and freely reduces.
Word substitute(const Word& w, int g, const Word& expr) {
  Word out;
  Word inv = inverse_word(expr);
  for (int x : w) {
    if (x == g)
      out.insert(out.end(), expr.begin(), expr.end());
    else if (x == -g)
      out.insert(out.end(), inv.begin(), inv.end());
    else
      out.push_back(x);
  }
  return free_reduce(out);
}

Word shift_down(Word w, int g) {
  for (int& x : w) {
    int a = x > 0 ? x : -x;
    if (a > g) x = x > 0 ? x - 1 : x + 1;
  }
  return w;
}

// Canonical key of a relator up to rotation and inversion, for deduping.
Word cyclic_key(const Word& w0) {
  Word w = cyclic_reduce(w0);
  if (w.empty()) return w;
  Word best;
  for (const Word& base : {w, inverse_word(w)}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word rot(base.begin() + static_cast<long>(k), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(k));
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

struct Simplifier {
  std::vector<std::string> names;
  std::vector<Word> relators;
  std::vector<Word> gen_in_parent;
  std::vector<Word>& schreier_to_current;
  std::size_t budget;

  Simplifier(std::vector<std::string> names_, std::vector<Word> relators_,
             std::vector<Word> gen_in_parent_, std::vector<Word>& s2c,
             const SimplifyOptions& opt)
      : names(std::move(names_)),
        relators(std::move(relators_)),
        gen_in_parent(std::move(gen_in_parent_)),
        schreier_to_current(s2c) {
    std::size_t initial = total_length();
    budget = std::max(opt.growth_factor * initial, opt.growth_floor);
  }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const Word& r : relators) n += r.size();
    return n;
  }

  int ngens() const { return static_cast<int>(names.size()); }

  void normalize() {
    std::vector<Word> kept;
    std::set<Word> seen;
    for (Word& r : relators) {
      Word red = cyclic_reduce(r);
      if (red.empty()) continue;
      if (seen.insert(cyclic_key(red)).second) kept.push_back(std::move(red));
    }
    relators = std::move(kept);
  }

  // Removes generator g, known equal to expr (a word avoiding +-g).
  void eliminate(int g, const Word& expr) {
    for (Word& r : relators) r = shift_down(substitute(r, g, expr), g);
    for (Word& w : schreier_to_current) w = shift_down(substitute(w, g, expr), g);
    names.erase(names.begin() + (g - 1));
    gen_in_parent.erase(gen_in_parent.begin() + (g - 1));
    normalize();
  }

  bool apply_length_one() {
    for (const Word& r : relators)
      if (r.size() == 1) {
        eliminate(r[0] > 0 ? r[0] : -r[0], {});
        return true;
      }
    return false;
  }

  bool apply_length_two() {
    for (const Word& r : relators) {
      if (r.size() != 2) continue;
      int a = r[0], b = r[1];
      int ga = a > 0 ? a : -a, gb = b > 0 ? b : -b;
      if (ga == gb) continue;  // a torsion relator like g^2, not an elimination
      // a b = 1; eliminate the higher-numbered generator
      if (ga > gb) {
        eliminate(ga, a > 0 ? Word{-b} : Word{b});
      } else {
        eliminate(gb, b > 0 ? Word{-a} : Word{a});
      }
      return true;
    }
    return false;
  }

  // Rewrites a long relator using more than half of a shorter one:
  // if s = u v with u appearing in t and |u| > |s|/2, then u = v^{-1}
  // shortens t.
  bool apply_substring() {
    for (std::size_t is = 0; is < relators.size(); ++is) {
      const Word s = relators[is];
      if (s.size() < 2) continue;
      std::vector<Word> patterns;
      for (const Word& base : {s, inverse_word(s)})
        for (std::size_t k = 0; k < base.size(); ++k) {
          Word rot(base.begin() + static_cast<long>(k), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(k));
          patterns.push_back(std::move(rot));
        }
      for (std::size_t it = 0; it < relators.size(); ++it) {
        if (it == is) continue;
        const Word& t = relators[it];
        if (t.size() < s.size()) continue;
        for (const Word& pat : patterns) {
          // longest prefix of pat found contiguously in t
          for (std::size_t start = 0; start < t.size(); ++start) {
            std::size_t m = 0;
            while (start + m < t.size() && m < pat.size() && t[start + m] == pat[m]) ++m;
            if (2 * m > pat.size()) {
              Word repl(pat.begin() + static_cast<long>(m), pat.end());
              repl = inverse_word(repl);
              Word nt(t.begin(), t.begin() + static_cast<long>(start));
              nt.insert(nt.end(), repl.begin(), repl.end());
              nt.insert(nt.end(), t.begin() + static_cast<long>(start + m), t.end());
              relators[it] = free_reduce(nt);
              normalize();
              return true;
            }
          }
        }
      }
    }
    return false;
  }

  bool apply_single_occurrence() {
    // Candidate: a relator containing some generator exactly once; cost of
    // eliminating is re-spelling every other occurrence of that generator.
    int best_g = 0;
    std::size_t best_rel = 0, best_cost = 0;
    bool have = false;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      const Word& r = relators[ri];
      for (int g = 1; g <= ngens(); ++g) {
        if (count_occurrences(r, g) != 1) continue;
        std::size_t elsewhere = 0;
        for (std::size_t rj = 0; rj < relators.size(); ++rj)
          if (rj != ri) elsewhere += static_cast<std::size_t>(count_occurrences(relators[rj], g));
        std::size_t cost = r.size() + elsewhere * (r.size() - 1);
        if (!have || cost < best_cost) {
          have = true;
          best_cost = cost;
          best_g = g;
          best_rel = ri;
        }
      }
    }
    if (!have) return false;
    if (total_length() + best_cost > budget) return false;
    // rotate so the single occurrence leads, then solve for the generator
    const Word& r = relators[best_rel];
    std::size_t pos = 0;
    while (r[pos] != best_g && r[pos] != -best_g) ++pos;
    Word rot(r.begin() + static_cast<long>(pos), r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + static_cast<long>(pos));
    Word rest(rot.begin() + 1, rot.end());
    // rot = g^e rest = 1:  g = rest^{-1} if e = +1, else g = rest
    Word expr = rot[0] > 0 ? inverse_word(rest) : rest;
    eliminate(best_g, expr);
    return true;
  }

  void run() {
    normalize();
    while (true) {
      if (apply_length_one()) continue;
      if (apply_length_two()) continue;
      if (apply_substring()) continue;
      if (apply_single_occurrence()) continue;
      break;
    }
    std::sort(relators.begin(), relators.end(), [](const Word& a, const Word& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
  }
};

}  // namespace

Word SubgroupPresentation::rewrite(const Word& parent_word) const {
  if (table.act_word(0, parent_word) != 0)
    throw std::invalid_argument("word does not lie in the subgroup (moves coset 0)");
  Word old;
  int c = 0;
  for (int x : parent_word) {
    if (x > 0) {
      int id = schreier_id[static_cast<std::size_t>(c)][static_cast<std::size_t>(x - 1)];
      if (id) old.push_back(id);
      c = table.act(c, x);
    } else {
      int d = table.act(c, x);
      int id = schreier_id[static_cast<std::size_t>(d)][static_cast<std::size_t>(-x - 1)];
      if (id) old.push_back(-id);
      c = d;
    }
  }
  Word out;
  for (int x : old) {
    const Word& w = schreier_to_current[static_cast<std::size_t>((x > 0 ? x : -x) - 1)];
    Word part = x > 0 ? w : inverse_word(w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return free_reduce(out);
}

SubgroupPresentation reidemeister_schreier(const Presentation& parent, const CosetTable& table,
                                           const SimplifyOptions& options) {
  parent.validate();
  table.validate(parent, {});
  int n = table.size();
  int ng = parent.ngens();

  // Breadth-first Schreier transversal; tree edges give trivial generators.
  std::vector<Word> rep(static_cast<std::size_t>(n));
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<char>> tree(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(2 * ng), 0));
  std::vector<int> queue = {0};
  visited[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    for (int col = 0; col < 2 * ng; ++col) {
      int t = table.entry(c, col);
      if (!visited[static_cast<std::size_t>(t)]) {
        visited[static_cast<std::size_t>(t)] = 1;
        rep[static_cast<std::size_t>(t)] = concat(rep[static_cast<std::size_t>(c)],
                                                  Word{letter_of_column(col)});
        tree[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)] = 1;
        queue.push_back(t);
      }
    }
  }

  std::vector<std::vector<int>> sid(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(ng), 0));
  std::vector<Word> gen_parent;
  for (int c = 0; c < n; ++c)
    for (int g = 1; g <= ng; ++g) {
      int d = table.act(c, g);
      bool is_tree =
          tree[static_cast<std::size_t>(c)][static_cast<std::size_t>(CosetTable::column(g))] ||
          tree[static_cast<std::size_t>(d)][static_cast<std::size_t>(CosetTable::column(-g))];
      if (is_tree) continue;
      sid[static_cast<std::size_t>(c)][static_cast<std::size_t>(g - 1)] =
          static_cast<int>(gen_parent.size()) + 1;
      gen_parent.push_back(free_reduce(
          concat(concat(rep[static_cast<std::size_t>(c)], Word{g}),
                 inverse_word(rep[static_cast<std::size_t>(d)]))));
    }

  // Reidemeister rewriting of each parent relator at each coset.
  auto emit = [&](int base, const Word& w) {
    Word out;
    int c = base;
    for (int x : w) {
      if (x > 0) {
        int id = sid[static_cast<std::size_t>(c)][static_cast<std::size_t>(x - 1)];
        if (id) out.push_back(id);
        c = table.act(c, x);
      } else {
        int d = table.act(c, x);
        int id = sid[static_cast<std::size_t>(d)][static_cast<std::size_t>(-x - 1)];
        if (id) out.push_back(-id);
        c = d;
      }
    }
    return free_reduce(out);
  };
  std::vector<Word> rels;
  for (int c = 0; c < n; ++c)
    for (const Word& r : parent.relators) rels.push_back(emit(c, r));

  SubgroupPresentation out;
  out.table = table;
  out.schreier_id = sid;
  out.schreier_to_current.resize(gen_parent.size());
  for (std::size_t i = 0; i < gen_parent.size(); ++i)
    out.schreier_to_current[i] = Word{static_cast<int>(i) + 1};

  std::vector<std::string> names;
  names.reserve(gen_parent.size());
  for (std::size_t i = 0; i < gen_parent.size(); ++i) names.push_back("s" + std::to_string(i + 1));

  if (options.enabled) {
    Simplifier s(std::move(names), std::move(rels), std::move(gen_parent),
                 out.schreier_to_current, options);
    s.run();
    out.pres.gen_names = std::move(s.names);
    out.pres.relators = std::move(s.relators);
    out.gen_in_parent = std::move(s.gen_in_parent);
  } else {
    out.pres.gen_names = std::move(names);
    out.pres.relators.clear();
    for (Word& r : rels) {
      Word red = cyclic_reduce(r);
      if (!red.empty()) out.pres.relators.push_back(std::move(red));
    }
    out.gen_in_parent = std::move(gen_parent);
  }
  out.pres.validate();
  return out;
}

}  // namespace chlat
