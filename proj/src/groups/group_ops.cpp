#include "chlat/groups/group_ops.hpp"

#include <map>
#include <stdexcept>

namespace chlat {

namespace {

IntMat relator_matrix(const Presentation& pres) {
  IntMat m(pres.relators.size(), static_cast<std::size_t>(pres.ngens()));
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    std::vector<long> e = exponent_vector(pres.relators[i], pres.ngens());
    for (std::size_t j = 0; j < e.size(); ++j) m.at(i, j) = e[j];
  }
  return m;
}

}  // namespace

AbelianInvariants abelianization(const Presentation& pres) {
  pres.validate();
  return cokernel_invariants(relator_matrix(pres));
}

std::vector<Int> AbelianizationData::coordinates(const Word& w) const {
  std::size_t n = V.rows;
  std::vector<long> e = exponent_vector(w, static_cast<int>(n));
  std::vector<Int> y(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += Int(e[i]) * V.at(i, j);
    if (factors[j] > 1) {
      acc %= factors[j];
      if (acc < 0) acc += factors[j];
    } else if (factors[j] == 1) {
      acc = 0;
    }
    y[j] = acc;
  }
  return y;
}

std::vector<Int> AbelianizationData::free_coordinates(const Word& w) const {
  std::vector<Int> y = coordinates(w);
  return std::vector<Int>(y.end() - static_cast<long>(free_count), y.end());
}

AbelianizationData abelianization_data(const Presentation& pres) {
  pres.validate();
  IntMat m = relator_matrix(pres);
  // Handle the relator-free case: SNF of a 0 x n matrix.
  std::size_t n = static_cast<std::size_t>(pres.ngens());
  AbelianizationData out;
  if (m.rows == 0) {
    out.invariants.free_rank = n;
    out.V = IntMat::identity(n);
    out.factors.assign(n, 0);
    out.free_count = n;
    return out;
  }
  SmithResult s = smith_normal_form(m, true);
  out.V = s.V;
  // Column j of V pairs with diagonal entry j (0 beyond the rank).
  out.factors.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    out.factors[j] = j < s.diag.size() ? s.diag[j] : Int(0);
  std::vector<Int> torsion;
  std::size_t free_cnt = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (out.factors[j] == 0)
      ++free_cnt;
    else if (out.factors[j] > 1)
      torsion.push_back(out.factors[j]);
  }
  out.invariants.torsion = torsion;
  out.invariants.free_rank = free_cnt;
  out.torsion_count = torsion.size();
  out.free_count = free_cnt;
  // Reorder coordinates: dead (factor 1) first, then torsion, then free,
  // keeping relative order inside each class.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < n; ++j)
    if (out.factors[j] == 1) order.push_back(j);
  for (std::size_t j = 0; j < n; ++j)
    if (out.factors[j] > 1) order.push_back(j);
  for (std::size_t j = 0; j < n; ++j)
    if (out.factors[j] == 0) order.push_back(j);
  IntMat v2(n, n);
  std::vector<Int> f2(n);
  for (std::size_t j = 0; j < n; ++j) {
    f2[j] = out.factors[order[j]];
    for (std::size_t i = 0; i < n; ++i) v2.at(i, j) = out.V.at(i, order[j]);
  }
  out.V = std::move(v2);
  out.factors = std::move(f2);
  return out;
}

CosetTable normal_core_table(const CosetTable& table, std::size_t max_order) {
  if (!table.complete()) throw std::logic_error("normal core needs a complete table");
  int ng = table.ngens;
  std::vector<std::vector<int>> pr = table.permutation_rep();
  std::vector<Perm> gens(static_cast<std::size_t>(ng));
  for (int g = 0; g < ng; ++g) gens[static_cast<std::size_t>(g)].map = pr[static_cast<std::size_t>(g)];

  // Breadth-first closure of the image group, elements in discovery order.
  std::map<Perm, int> index;
  std::vector<Perm> elements;
  Perm id = Perm::identity(table.size());
  index[id] = 0;
  elements.push_back(id);
  for (std::size_t qi = 0; qi < elements.size(); ++qi) {
    Perm cur = elements[qi];  // copy: elements may reallocate
    for (int g = 0; g < ng; ++g) {
      Perm next = cur * gens[static_cast<std::size_t>(g)];
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        if (elements.size() >= max_order)
          throw std::runtime_error("action image exceeds the core order cap");
        elements.push_back(std::move(next));
      }
    }
  }

  CosetTable core(ng, static_cast<int>(elements.size()));
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (int g = 0; g < ng; ++g) {
      Perm next = elements[e] * gens[static_cast<std::size_t>(g)];
      int t = index.at(next);
      core.entry(static_cast<int>(e), CosetTable::column(g + 1)) = t;
      core.entry(t, CosetTable::column(-(g + 1))) = static_cast<int>(e);
    }
  return core;
}

std::optional<std::size_t> group_order(const Presentation& pres, const TCLimits& limits) {
  if (pres.ngens() == 0) return 1;  // the trivial group
  TCResult r = todd_coxeter(pres, {}, limits);
  if (!r.ok()) return std::nullopt;
  return r.index;
}

}  // namespace chlat
