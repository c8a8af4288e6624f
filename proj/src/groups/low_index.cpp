#include "chlat/groups/low_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace chlat {

namespace {

struct Searcher {
  const Presentation& pres;
  int nmax;
  int width;
  std::vector<int> tab;  // nmax rows, preallocated, -1 undefined
  int ncur = 1;
  // Rotations of the relators and their inverses, bucketed by the column
  // of the first letter: the consequences of a new edge on that letter.
  std::vector<std::vector<Word>> buckets;
  std::vector<std::pair<int, int>> trail;  // slots set, for backtracking
  std::vector<CosetTable> found;
  std::size_t nodes = 0;
  std::size_t max_nodes;

  Searcher(const Presentation& p, int n, std::size_t budget)
      : pres(p), nmax(n), width(2 * p.ngens()), max_nodes(budget) {
    tab.assign(static_cast<std::size_t>(nmax) * width, -1);
    buckets.assign(static_cast<std::size_t>(width), {});
    for (const Word& r0 : pres.relators) {
      Word r = cyclic_reduce(r0);
      if (r.empty()) continue;
      for (const Word& w : {r, inverse_word(r)})
        for (std::size_t k = 0; k < w.size(); ++k) {
          Word rot(w.begin() + static_cast<long>(k), w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(k));
          buckets[static_cast<std::size_t>(CosetTable::column(rot[0]))].push_back(rot);
        }
    }
  }

  int& at(int c, int col) { return tab[static_cast<std::size_t>(c) * width + col]; }

  void install(int c, int col, int d, std::vector<std::pair<int, int>>& queue) {
    at(c, col) = d;
    at(d, col ^ 1) = c;
    trail.emplace_back(c, col);
    trail.emplace_back(d, col ^ 1);
    queue.emplace_back(c, col);
    queue.emplace_back(d, col ^ 1);
  }

  // Scans rot from c; installs a single-gap deduction, reports a mismatch.
  bool scan(int c, const Word& rot, std::vector<std::pair<int, int>>& queue) {
    int f = c;
    std::size_t i = 0;
    int b = c;
    std::size_t j = rot.size();
    while (i < j) {
      int t = at(f, CosetTable::column(rot[i]));
      if (t < 0) break;
      f = t;
      ++i;
    }
    if (i == j) return f == b;
    while (j > i + 1) {
      int t = at(b, CosetTable::column(-rot[j - 1]));
      if (t < 0) break;
      b = t;
      --j;
    }
    if (j == i + 1) {
      // Single gap: the relator forces f . rot[i] = b.  An existing edge
      // into b on this letter from elsewhere would force two cosets equal,
      // which prunes the branch.
      int back = at(b, CosetTable::column(-rot[i]));
      if (back >= 0) return back == f;
      install(f, CosetTable::column(rot[i]), b, queue);
    }
    return true;
  }

  // Forces every consequence of the queued edges; false on contradiction.
  bool propagate(std::vector<std::pair<int, int>>& queue) {
    while (!queue.empty()) {
      auto [c, col] = queue.back();
      queue.pop_back();
      for (const Word& rot : buckets[static_cast<std::size_t>(col)])
        if (!scan(c, rot, queue)) return false;
    }
    return true;
  }

  void record() {
    CosetTable t(pres.ngens(), ncur);
    for (int c = 0; c < ncur; ++c)
      for (int col = 0; col < width; ++col) t.entry(c, col) = at(c, col);
    CosetTable std0 = t.standardized();
    for (int base = 1; base < ncur; ++base)
      if (t.standardized_from(base).flat() < std0.flat()) return;  // not first in class
    found.push_back(std::move(std0));
  }

  void search() {
    if (++nodes > max_nodes)
      throw std::runtime_error("subgroup search exceeded its node budget");
    int alpha = -1, col = -1;
    for (int c = 0; c < ncur && alpha < 0; ++c)
      for (int k = 0; k < width; ++k)
        if (at(c, k) < 0) {
          alpha = c;
          col = k;
          break;
        }
    if (alpha < 0) {
      record();
      return;
    }
    std::size_t mark = trail.size();
    for (int beta = 0; beta <= ncur && beta < nmax; ++beta) {
      bool fresh = beta == ncur;
      if (!fresh && at(beta, col ^ 1) >= 0) continue;
      if (fresh) ++ncur;
      std::vector<std::pair<int, int>> queue;
      install(alpha, col, beta, queue);
      if (propagate(queue)) search();
      while (trail.size() > mark) {
        auto [c, k] = trail.back();
        trail.pop_back();
        at(c, k) = -1;
      }
      if (fresh) --ncur;
    }
  }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int max_index,
                                            const LowIndexOptions& options) {
  pres.validate();
  if (pres.ngens() == 0) throw std::invalid_argument("presentation needs generators");
  if (max_index < 1) return {};
  Searcher s(pres, max_index, options.max_nodes);
  s.search();
  std::sort(s.found.begin(), s.found.end(), [](const CosetTable& a, const CosetTable& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.flat() < b.flat();
  });
  return s.found;
}

}  // namespace chlat
