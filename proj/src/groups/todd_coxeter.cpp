#include "chlat/groups/todd_coxeter.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace chlat {

namespace {

// Working state for an enumeration.  Cosets are rows of a flat table that
// only grows; merged cosets stay as dead rows (union-find parent points at
// a smaller coset) until compaction.  The table invariant, at rest: for
// live cosets a, b, entry(a, c) == b implies entry(b, c^1) == a, modulo
// lazily-compressed aliases of dead cosets.
struct Enumerator {
  int ngens;
  int width;
  std::vector<int> tab;    // nrows * width
  std::vector<int> parent; // union-find, parent[i] <= i, parent[i] == i iff live
  std::deque<int> dead;    // merged cosets awaiting row transfer
  std::size_t nalive = 0;
  std::size_t ndefined = 0;
  const TCLimits& lim;
  // Deduction propagation (immediate-deduction strategy): stack of
  // (coset, signed generator) edges whose consequences are unscanned, and
  // for each signed generator the relator rotations beginning with it.
  bool track_deductions = false;
  std::vector<std::pair<int, int>> deductions;
  std::vector<std::vector<Word>> rotations;  // indexed by column of first letter

  explicit Enumerator(int ngens_, const TCLimits& lim_)
      : ngens(ngens_), width(2 * ngens_), lim(lim_) {}

  int nrows() const { return static_cast<int>(tab.size()) / width; }

  int& at(int coset, int col) { return tab[static_cast<std::size_t>(coset) * width + col]; }

  static int col_of(int signed_gen) { return CosetTable::column(signed_gen); }

  int rep(int k) {
    int r = k;
    while (parent[static_cast<std::size_t>(r)] != r) r = parent[static_cast<std::size_t>(r)];
    while (parent[static_cast<std::size_t>(k)] != r) {
      int next = parent[static_cast<std::size_t>(k)];
      parent[static_cast<std::size_t>(k)] = r;
      k = next;
    }
    return r;
  }

  bool alive(int k) { return rep(k) == k; }

  // Rep-compressed read of entry(coset, col); -1 if undefined.
  int lookup(int coset, int col) {
    int raw = at(coset, col);
    if (raw < 0) return -1;
    int r = rep(raw);
    if (r != raw) at(coset, col) = r;
    return r;
  }

  bool room_for_new() const { return nalive < lim.max_cosets && ndefined < lim.max_steps; }

  int new_coset() {
    tab.resize(tab.size() + static_cast<std::size_t>(width), -1);
    parent.push_back(nrows() - 1);
    ++nalive;
    ++ndefined;
    return nrows() - 1;
  }

  void push_deduction(int coset, int signed_gen) {
    if (track_deductions) deductions.emplace_back(coset, signed_gen);
  }

  // Installs the mutually-inverse pair a . s = b.  Both slots must be
  // undefined (or already consistent).
  void install(int a, int s, int b) {
    at(a, col_of(s)) = b;
    at(b, col_of(-s)) = a;
    push_deduction(a, s);
    push_deduction(b, -s);
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    int lo = a < b ? a : b;
    int hi = a < b ? b : a;
    parent[static_cast<std::size_t>(hi)] = lo;
    --nalive;
    dead.push_back(hi);
  }

  // Declares cosets a and b equal and restores the table invariant by
  // transferring every edge of each dead coset to its representative,
  // merging further when both carry an edge on the same letter.
  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead.empty()) {
      int g = dead.front();
      dead.pop_front();
      for (int col = 0; col < width; ++col) {
        int d = at(g, col);
        if (d < 0) continue;
        // Drop the paired edge into g, if still present.
        if (at(d, col ^ 1) == g) at(d, col ^ 1) = -1;
        int mu = rep(g);
        int nu = rep(d);
        // Transfer the edge g . col = d to mu . col = nu.  A different
        // existing image forces a further merge (columns are injective);
        // likewise a different existing preimage on the inverse column.
        // Otherwise write the pair, which also normalizes stale aliases.
        int existing = lookup(mu, col);
        int back = lookup(nu, col ^ 1);
        if (existing >= 0 && existing != nu) {
          merge(nu, existing);
        } else if (back >= 0 && back != mu) {
          merge(mu, back);
        } else {
          at(mu, col) = nu;
          at(nu, col ^ 1) = mu;
          push_deduction(mu, col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1));
          push_deduction(nu, (col ^ 1) % 2 == 0 ? (col ^ 1) / 2 + 1 : -((col ^ 1) / 2 + 1));
        }
      }
    }
  }

  // Traces w from base requiring base . w = base, defining new cosets to
  // bridge gaps when fill is set (otherwise acting on existing entries
  // only: completing single-gap deductions and reporting collisions as
  // coincidences).  Returns false when a definition was needed but the
  // limits forbid it; the caller decides what to do.  base may be dead on
  // return (check alive(base)).
  bool scan(int base, const Word& w, bool fill) {
    if (w.empty()) return true;
  restart:
    base = rep(base);
    int f = base;
    std::size_t i = 0;
    int b = base;
    std::size_t j = w.size();
    while (true) {
      while (i < j) {
        int t = lookup(f, col_of(w[i]));
        if (t < 0) break;
        f = t;
        ++i;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
          if (!alive(base)) return true;
          goto restart;
        }
        return true;
      }
      while (j > i + 1) {
        int t = lookup(b, col_of(-w[j - 1]));
        if (t < 0) break;
        b = t;
        --j;
      }
      if (j == i + 1) {
        // Exactly one gap: deduce f . w[i] = b.
        int back = lookup(b, col_of(-w[i]));
        if (back >= 0) {
          if (back != f) {
            coincidence(back, f);
            if (!alive(base)) return true;
            goto restart;
          }
          at(f, col_of(w[i])) = b;  // restore the pair alongside a stale alias
        } else {
          install(f, w[i], b);
        }
        return true;
      }
      if (!fill) return true;
      if (!room_for_new()) return false;
      int n = new_coset();
      install(f, w[i], n);
      f = n;
      ++i;
    }
  }

  // Scan-only pass over every live coset and relator, hunting for
  // coincidences when the coset budget is exhausted.
  void lookahead(const std::vector<Word>& relators) {
    for (int c = 0; c < nrows(); ++c) {
      if (!alive(c)) continue;
      for (const Word& r : relators) {
        scan(c, r, false);
        if (!alive(c)) break;
      }
    }
  }

  // Drops dead rows, renumbering live cosets in increasing order.  Entries
  // are resolved to representatives first.  Returns old-live-index -> new.
  std::vector<int> compact() {
    int n = nrows();
    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int c = 0; c < n; ++c)
      if (rep(c) == c) old_to_new[static_cast<std::size_t>(c)] = next++;
    std::vector<int> newtab(static_cast<std::size_t>(next) * width, -1);
    for (int c = 0; c < n; ++c) {
      int nc = old_to_new[static_cast<std::size_t>(c)];
      if (nc < 0) continue;
      for (int col = 0; col < width; ++col) {
        int t = at(c, col);
        if (t >= 0) newtab[static_cast<std::size_t>(nc) * width + col] =
            old_to_new[static_cast<std::size_t>(rep(t))];
      }
    }
    tab = std::move(newtab);
    parent.resize(static_cast<std::size_t>(next));
    for (int c = 0; c < next; ++c) parent[static_cast<std::size_t>(c)] = c;
    nalive = static_cast<std::size_t>(next);
    return old_to_new;
  }

  CosetTable snapshot() {
    compact();
    CosetTable t(ngens, nrows());
    t.tab = tab;
    return t;
  }
};

TCResult run_hlt(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                 const TCLimits& lim) {
  Enumerator e(pres.ngens(), lim);
  e.new_coset();
  for (const Word& h : subgroup_gens)
    if (!e.scan(0, h, true)) return {TCStatus::undecided, {}, 0, e.ndefined};

  int alpha = 0;
  while (alpha < e.nrows()) {
    if (!e.alive(alpha)) {
      ++alpha;
      continue;
    }
    bool stalled = false;
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
      while (!e.scan(alpha, pres.relators[ri], true)) {
        // Out of room: hunt for coincidences, compact, and retry; if the
        // hunt frees nothing we cannot make progress.
        std::size_t before = e.nalive;
        e.lookahead(pres.relators);
        if (e.nalive == before) return {TCStatus::undecided, {}, 0, e.ndefined};
        std::vector<int> remap = e.compact();
        alpha = remap[static_cast<std::size_t>(e.rep(alpha))];
        if (alpha < 0) throw std::logic_error("live coset lost in compaction");
      }
      if (!e.alive(alpha)) {
        stalled = true;
        break;
      }
    }
    if (stalled) {
      ++alpha;
      continue;
    }
    for (int col = 0; col < e.width; ++col) {
      if (e.lookup(alpha, col) >= 0) continue;
      while (!e.room_for_new()) {
        std::size_t before = e.nalive;
        e.lookahead(pres.relators);
        if (e.nalive == before) return {TCStatus::undecided, {}, 0, e.ndefined};
        std::vector<int> remap = e.compact();
        alpha = remap[static_cast<std::size_t>(e.rep(alpha))];
        if (alpha < 0) throw std::logic_error("live coset lost in compaction");
      }
      if (e.lookup(alpha, col) >= 0) continue;
      int n = e.new_coset();
      int s = col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1);
      e.install(alpha, s, n);
    }
    ++alpha;
  }

  TCResult res;
  res.status = TCStatus::success;
  res.total_defined = e.ndefined;
  res.table = e.snapshot().standardized();
  res.index = static_cast<std::size_t>(res.table.size());
  res.table.validate(pres, subgroup_gens);
  return res;
}

TCResult run_felsch(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                    const TCLimits& lim) {
  Enumerator e(pres.ngens(), lim);
  e.track_deductions = true;
  // Rotations of every relator and its inverse, bucketed by first letter,
  // so the consequences of a new edge a . s = b are exactly the scans of
  // bucket[s] at a (and bucket[-s] at b, pushed separately).
  e.rotations.assign(static_cast<std::size_t>(e.width), {});
  for (const Word& r0 : pres.relators) {
    for (const Word& r : {free_reduce(r0), inverse_word(free_reduce(r0))}) {
      if (r.empty()) continue;
      for (std::size_t k = 0; k < r.size(); ++k) {
        Word rot(r.begin() + static_cast<long>(k), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<long>(k));
        e.rotations[static_cast<std::size_t>(Enumerator::col_of(rot[0]))].push_back(rot);
      }
    }
  }

  auto drain = [&e]() {
    while (!e.deductions.empty()) {
      auto [c, s] = e.deductions.back();
      e.deductions.pop_back();
      c = e.rep(c);
      for (const Word& rot : e.rotations[static_cast<std::size_t>(Enumerator::col_of(s))]) {
        e.scan(c, rot, false);
        if (!e.alive(c)) break;
      }
    }
  };

  e.new_coset();
  for (const Word& h : subgroup_gens) {
    if (!e.scan(0, h, true)) return {TCStatus::undecided, {}, 0, e.ndefined};
    drain();
  }
  while (true) {
    // First undefined slot in coset-major order; rescan from the top since
    // coincidences can vacate earlier slots.
    int alpha = -1, col = -1;
    for (int c = 0; c < e.nrows() && alpha < 0; ++c) {
      if (!e.alive(c)) continue;
      for (int k = 0; k < e.width; ++k)
        if (e.lookup(c, k) < 0) {
          alpha = c;
          col = k;
          break;
        }
    }
    if (alpha < 0) break;  // complete
    if (!e.room_for_new()) return {TCStatus::undecided, {}, 0, e.ndefined};
    int n = e.new_coset();
    int s = col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1);
    e.install(alpha, s, n);
    drain();
  }

  TCResult res;
  res.status = TCStatus::success;
  res.total_defined = e.ndefined;
  res.table = e.snapshot().standardized();
  res.index = static_cast<std::size_t>(res.table.size());
  res.table.validate(pres, subgroup_gens);
  return res;
}

}  // namespace

TCResult todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                      const TCLimits& limits) {
  pres.validate();
  if (pres.ngens() == 0) throw std::invalid_argument("enumeration needs at least one generator");
  for (const Word& h : subgroup_gens)
    for (int x : h) {
      int g = x > 0 ? x : -x;
      if (g < 1 || g > pres.ngens())
        throw std::invalid_argument("subgroup generator letter out of range");
    }
  if (limits.felsch) return run_felsch(pres, subgroup_gens, limits);
  return run_hlt(pres, subgroup_gens, limits);
}

}  // namespace chlat
