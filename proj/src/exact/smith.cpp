#include <chlat/exact/smith.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chlat {

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
  IntMat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

namespace {

struct Ops {
  IntMat A;
  IntMat U, V;
  bool track;

  void row_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    if (track)
      for (size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
  }
  void col_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    if (track)
      for (size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
  }
  // row i += k * row j
  void row_add(size_t i, size_t j, const Int& k) {
    if (k == 0) return;
    for (size_t c = 0; c < A.cols; ++c) A.at(i, c) += k * A.at(j, c);
    if (track)
      for (size_t c = 0; c < U.cols; ++c) U.at(i, c) += k * U.at(j, c);
  }
  // col i += k * col j
  void col_add(size_t i, size_t j, const Int& k) {
    if (k == 0) return;
    for (size_t r = 0; r < A.rows; ++r) A.at(r, i) += k * A.at(r, j);
    if (track)
      for (size_t r = 0; r < V.rows; ++r) V.at(r, i) += k * V.at(r, j);
  }
  void row_negate(size_t i) {
    for (size_t c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
    if (track)
      for (size_t c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(IntMat A, bool with_transforms) {
  const size_t rows = A.rows, cols = A.cols;
  Ops ops{std::move(A), IntMat(), IntMat(), with_transforms};
  if (with_transforms) {
    ops.U = IntMat::identity(rows);
    ops.V = IntMat::identity(cols);
  }
  const size_t n = std::min(rows, cols);

  for (size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: entry of minimal |value| in the trailing submatrix,
      // ties broken by (row, col) position.
      size_t pi = t, pj = t;
      Int best(0);
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j) {
          const Int& v = ops.A.at(i, j);
          if (v == 0) continue;
          Int av = abs(v);
          if (best == 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;  // submatrix is zero; done with all t' >= t
      ops.row_swap(t, pi);
      ops.col_swap(t, pj);
      if (ops.A.at(t, t) < 0) ops.row_negate(t);

      // Reduce column and row t by the pivot (truncated division; leftover
      // remainders become smaller pivots on the next pass).
      for (size_t i = t + 1; i < rows; ++i) {
        Int q = ops.A.at(i, t) / ops.A.at(t, t);
        ops.row_add(i, t, -q);
      }
      for (size_t j = t + 1; j < cols; ++j) {
        Int q = ops.A.at(t, j) / ops.A.at(t, t);
        ops.col_add(j, t, -q);
      }
      // If everything in row/col t is zero apart from the pivot, enforce that
      // the pivot divides the rest of the submatrix, then move on.
      bool clean = true;
      for (size_t i = t + 1; i < rows && clean; ++i)
        if (ops.A.at(i, t) != 0) clean = false;
      for (size_t j = t + 1; j < cols && clean; ++j)
        if (ops.A.at(t, j) != 0) clean = false;
      if (!clean) continue;

      const Int& d = ops.A.at(t, t);
      bool divides_all = true;
      for (size_t i = t + 1; i < rows && divides_all; ++i)
        for (size_t j = t + 1; j < cols && divides_all; ++j)
          if (ops.A.at(i, j) % d != 0) {
            ops.row_add(t, i, Int(1));  // pull the offending row up, retry
            divides_all = false;
          }
      if (divides_all) break;
    }
  }

  SmithResult res;
  res.with_transforms = with_transforms;
  res.diag.resize(n);
  for (size_t t = 0; t < n; ++t) res.diag[t] = ops.A.at(t, t);
  if (with_transforms) {
    res.U = std::move(ops.U);
    res.V = std::move(ops.V);
  }
  return res;
}

Int AbelianInvariants::torsion_order() const {
  Int o(1);
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : torsion) {
    if (!first) out << " x ";
    out << "Z_" << t.get_str();
    first = false;
  }
  if (free_rank > 0) {
    if (!first) out << " x ";
    if (free_rank == 1)
      out << "Z";
    else
      out << "Z^" << free_rank;
  }
  return out.str();
}

AbelianInvariants AbelianInvariants::parse(const std::string& s) {
  AbelianInvariants inv;
  if (s == "1") return inv;
  size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == 'x')) ++pos;
    if (pos >= s.size()) break;
    if (s[pos] != 'Z') throw std::invalid_argument("AbelianInvariants::parse: " + s);
    ++pos;
    if (pos < s.size() && s[pos] == '_') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) != 0)) ++pos;
      if (start == pos) throw std::invalid_argument("AbelianInvariants::parse: " + s);
      inv.torsion.push_back(Int(s.substr(start, pos - start)));
    } else if (pos < s.size() && s[pos] == '^') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) != 0)) ++pos;
      if (start == pos) throw std::invalid_argument("AbelianInvariants::parse: " + s);
      inv.free_rank += std::stoul(s.substr(start, pos - start));
    } else {
      inv.free_rank += 1;
    }
  }
  return inv;
}

AbelianInvariants cokernel_invariants(const IntMat& relations) {
  AbelianInvariants inv;
  if (relations.cols == 0) return inv;
  if (relations.rows == 0) {
    inv.free_rank = relations.cols;
    return inv;
  }
  SmithResult s = smith_normal_form(relations, false);
  size_t nonzero = 0;
  for (const auto& d : s.diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = relations.cols - nonzero;
  return inv;
}

}  // namespace chlat
