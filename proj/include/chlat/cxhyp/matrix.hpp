#pragma once

// Exact 3x3 linear algebra over a number field: products, determinants,
// inverses, conjugate transposes, characteristic polynomials, kernels, and
// subspace intersections. Vectors are columns; A * v applies A on the left.

#include <chlat/exact/nf_poly.hpp>
#include <chlat/exact/number_field.hpp>

#include <array>
#include <string>
#include <vector>

namespace chlat {

using NFVec3 = std::array<NFElem, 3>;

NFVec3 vec_add(const NFVec3& a, const NFVec3& b);
NFVec3 vec_sub(const NFVec3& a, const NFVec3& b);
NFVec3 vec_scale(const NFVec3& a, const NFElem& s);
bool vec_is_zero(const NFVec3& a);
bool vec_eq(const NFVec3& a, const NFVec3& b);
// True when a = s * b for a nonzero scalar s (neither vector zero).
bool vec_proportional(const NFVec3& a, const NFVec3& b);

struct NFMat3 {
  std::array<NFElem, 9> m;  // row-major

  NFElem& at(int i, int j) { return m[static_cast<size_t>(3 * i + j)]; }
  const NFElem& at(int i, int j) const { return m[static_cast<size_t>(3 * i + j)]; }

  static NFMat3 identity();
  static NFMat3 zero();
  static NFMat3 scalar(const NFElem& s);

  NFMat3 operator*(const NFMat3& o) const;
  NFMat3 operator+(const NFMat3& o) const;
  NFMat3 operator-(const NFMat3& o) const;
  NFMat3 scaled(const NFElem& s) const;
  NFVec3 operator*(const NFVec3& v) const;
  bool operator==(const NFMat3& o) const { return m == o.m; }
  bool operator!=(const NFMat3& o) const { return !(*this == o); }

  NFElem det() const;
  NFElem trace() const;
  NFMat3 adjugate() const;
  NFMat3 inverse() const;  // throws on zero determinant
  NFMat3 conj_transpose() const;
  NFMat3 pow(long e) const;
  bool is_zero() const;
  bool is_scalar() const;

  // Monic characteristic polynomial det(xI - A), degree 3.
  NFPoly char_poly() const;

  std::string to_string() const;
};

// True when a = s * b for a nonzero scalar s (projective equality).
bool mat_proportional(const NFMat3& a, const NFMat3& b);

// Basis of the kernel of A (possibly empty), by exact Gaussian elimination.
std::vector<NFVec3> kernel_basis(const NFMat3& a);

// Basis of the intersection of two spans.
std::vector<NFVec3> intersect_spans(const std::vector<NFVec3>& a, const std::vector<NFVec3>& b);

}  // namespace chlat
