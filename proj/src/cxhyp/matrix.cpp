#include "chlat/cxhyp/matrix.hpp"

#include <stdexcept>

namespace chlat {

NFVec3 vec_add(const NFVec3& a, const NFVec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

NFVec3 vec_sub(const NFVec3& a, const NFVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

NFVec3 vec_scale(const NFVec3& a, const NFElem& s) { return {a[0] * s, a[1] * s, a[2] * s}; }

bool vec_is_zero(const NFVec3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

bool vec_eq(const NFVec3& a, const NFVec3& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

bool vec_proportional(const NFVec3& a, const NFVec3& b) {
  if (vec_is_zero(a) || vec_is_zero(b)) return false;
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (!b[static_cast<size_t>(i)].is_zero()) {
      lead = i;
      break;
    }
  const NFElem& bl = b[static_cast<size_t>(lead)];
  if (a[static_cast<size_t>(lead)].is_zero()) return false;
  NFElem s = a[static_cast<size_t>(lead)] / bl;
  return vec_eq(a, vec_scale(b, s));
}

NFMat3 NFMat3::identity() {
  NFMat3 r = zero();
  for (int i = 0; i < 3; ++i) r.at(i, i) = NFElem(Rat(1));
  return r;
}

NFMat3 NFMat3::zero() { return NFMat3{}; }

NFMat3 NFMat3::scalar(const NFElem& s) {
  NFMat3 r = zero();
  for (int i = 0; i < 3; ++i) r.at(i, i) = s;
  return r;
}

NFMat3 NFMat3::operator*(const NFMat3& o) const {
  NFMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      NFElem s;
      for (int k = 0; k < 3; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

NFMat3 NFMat3::operator+(const NFMat3& o) const {
  NFMat3 r;
  for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

NFMat3 NFMat3::operator-(const NFMat3& o) const {
  NFMat3 r;
  for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

NFMat3 NFMat3::scaled(const NFElem& s) const {
  NFMat3 r;
  for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] * s;
  return r;
}

NFVec3 NFMat3::operator*(const NFVec3& v) const {
  NFVec3 r;
  for (int i = 0; i < 3; ++i) {
    NFElem s;
    for (int k = 0; k < 3; ++k) s = s + at(i, k) * v[static_cast<size_t>(k)];
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

NFElem NFMat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

NFElem NFMat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

NFMat3 NFMat3::adjugate() const {
  NFMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // Cyclic index choices absorb the cofactor signs; transpose via (j,i).
      r.at(j, i) = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    }
  return r;
}

NFMat3 NFMat3::inverse() const {
  NFElem d = det();
  if (d.is_zero()) throw std::invalid_argument("singular matrix");
  return adjugate().scaled(d.inverse());
}

NFMat3 NFMat3::conj_transpose() const {
  NFMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i).conj();
  return r;
}

NFMat3 NFMat3::pow(long e) const {
  NFMat3 base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  NFMat3 acc = identity();
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool NFMat3::is_zero() const {
  for (const NFElem& e : m)
    if (!e.is_zero()) return false;
  return true;
}

bool NFMat3::is_scalar() const {
  if (at(0, 0) != at(1, 1) || at(1, 1) != at(2, 2)) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

NFPoly NFMat3::char_poly() const {
  // x^3 - tr x^2 + (sum of principal 2x2 minors) x - det.
  NFElem m2;
  for (int i = 0; i < 3; ++i) {
    int a = (i + 1) % 3, b = (i + 2) % 3;
    int lo = std::min(a, b), hi = std::max(a, b);
    m2 = m2 + (at(lo, lo) * at(hi, hi) - at(lo, hi) * at(hi, lo));
  }
  return {-det(), m2, -trace(), NFElem(Rat(1))};
}

std::string NFMat3::to_string() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    s += i == 0 ? "[" : " ";
    s += "[";
    for (int j = 0; j < 3; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += i == 2 ? "]]" : "]\n";
  }
  return s;
}

bool mat_proportional(const NFMat3& a, const NFMat3& b) {
  if (a.is_zero() || b.is_zero()) return false;
  size_t lead = 0;
  while (b.m[lead].is_zero()) ++lead;
  if (a.m[lead].is_zero()) return false;
  NFElem s = a.m[lead] / b.m[lead];
  for (size_t i = 0; i < 9; ++i)
    if (a.m[i] != b.m[i] * s) return false;
  return true;
}

// Reduced row echelon form of a 3 x n matrix given as rows; returns pivot
// column indices. Used for kernels and span intersections.
namespace {

std::vector<int> rref(std::vector<std::vector<NFElem>>& rows) {
  std::vector<int> pivots;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    NFElem inv = rows[rank][col].inverse();
    for (size_t j = col; j < ncols; ++j) rows[rank][j] = rows[rank][j] * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      NFElem f = rows[i][col];
      for (size_t j = col; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  return pivots;
}

// Nullspace basis of the matrix whose rows are given (any shape).
std::vector<std::vector<NFElem>> nullspace(std::vector<std::vector<NFElem>> rows) {
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<NFElem>> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<NFElem> v(ncols);
    v[free_col] = NFElem(Rat(1));
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<NFVec3> kernel_basis(const NFMat3& a) {
  std::vector<std::vector<NFElem>> rows(3, std::vector<NFElem>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.at(i, j);
  std::vector<NFVec3> out;
  for (auto& v : nullspace(std::move(rows))) out.push_back({v[0], v[1], v[2]});
  return out;
}

std::vector<NFVec3> intersect_spans(const std::vector<NFVec3>& a, const std::vector<NFVec3>& b) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i = sum y_j b_j: nullspace of the 3 x (|a|+|b|) matrix
  // [a | -b]; read the intersection off the x part.
  size_t cols = a.size() + b.size();
  std::vector<std::vector<NFElem>> rows(3, std::vector<NFElem>(cols));
  for (int r = 0; r < 3; ++r) {
    for (size_t i = 0; i < a.size(); ++i) rows[static_cast<size_t>(r)][i] = a[i][static_cast<size_t>(r)];
    for (size_t j = 0; j < b.size(); ++j)
      rows[static_cast<size_t>(r)][a.size() + j] = -b[j][static_cast<size_t>(r)];
  }
  std::vector<NFVec3> out;
  for (const auto& sol : nullspace(std::move(rows))) {
    NFVec3 v = {NFElem(), NFElem(), NFElem()};
    for (size_t i = 0; i < a.size(); ++i) v = vec_add(v, vec_scale(a[i], sol[i]));
    if (!vec_is_zero(v)) out.push_back(v);
  }
  // The combinations may be linearly dependent; reduce to a basis.
  std::vector<std::vector<NFElem>> red;
  for (const NFVec3& v : out) red.push_back({v[0], v[1], v[2]});
  std::vector<std::vector<NFElem>> copy = red;
  std::vector<int> pivots = rref(copy);
  std::vector<NFVec3> basis;
  for (size_t i = 0; i < pivots.size(); ++i)
    basis.push_back({copy[i][0], copy[i][1], copy[i][2]});
  return basis;
}

}  // namespace chlat
