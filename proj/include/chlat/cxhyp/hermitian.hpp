#pragma once

// Hermitian forms of signature (2,1) over a CM number field, and the
// projective unitary matrices that preserve them.
//
// The inner product convention is <X,Y> = Y* H X: linear in the first
// argument, conjugate-linear in the second. A vector V is negative when
// <V,V> < 0 (it represents a point of the complex hyperbolic plane),
// null when <V,V> = 0 (an ideal boundary point), positive otherwise.
//
// A matrix A acts projectively; it preserves the form up to a scalar when
// A* H A = s H for some s in the field (necessarily real and positive on
// signature grounds when A is invertible). ProjUnitaryMatrix records that
// scalar so strict unitarity (s = 1) stays checkable.

#include <chlat/cxhyp/matrix.hpp>
#include <chlat/exact/number_field.hpp>

#include <optional>
#include <utility>

namespace chlat {

// Signature of a nondegenerate Hermitian 3x3 matrix as (positives, negatives).
// Throws std::invalid_argument if H is not self-adjoint or is degenerate.
std::pair<int, int> hermitian_signature(const NFMat3& h);

struct HermitianForm {
  NFMat3 mat;

  // <X,Y> = Y* mat X.
  NFElem inner(const NFVec3& x, const NFVec3& y) const;
  NFElem norm(const NFVec3& v) const { return inner(v, v); }

  // Sign of <V,V> (always real): -1, 0, +1.
  int vector_sign(const NFVec3& v) const;
};

// Validates self-adjointness and signature (2,1); throws otherwise.
HermitianForm make_hermitian_form(const NFMat3& h);

// The scalar s with A* H A = s H, when one exists (A need not be invertible
// for the test, but s = 0 is rejected). nullopt when A does not preserve H
// projectively.
std::optional<NFElem> unitary_scalar(const NFMat3& a, const HermitianForm& form);

// True exactly when A* H A = H.
bool verify_unitary(const NFMat3& a, const HermitianForm& form);

struct ProjUnitaryMatrix {
  NFMat3 mat;
  NFElem scale;  // A* H A = scale * H

  bool strictly_unitary() const { return scale.is_one(); }
};

// Throws std::invalid_argument when A does not preserve the form up to a
// scalar (or is singular).
ProjUnitaryMatrix make_proj_unitary(const NFMat3& a, const HermitianForm& form);

// Projective equality: equal up to a nonzero scalar multiple.
inline bool proj_equal(const ProjUnitaryMatrix& a, const ProjUnitaryMatrix& b) {
  return mat_proportional(a.mat, b.mat);
}
inline bool proj_equal(const ProjUnitaryMatrix& a, const NFMat3& b) {
  return mat_proportional(a.mat, b);
}

// Complex reflection with mirror orthogonal to V0 and rotation angle zeta:
//   R(X) = X + (zeta - 1) (<X,V0> / <V0,V0>) V0.
// Requires <V0,V0> != 0 and zeta conj(zeta) = 1; the result is strictly
// unitary for the given form.
ProjUnitaryMatrix build_reflection(const NFVec3& v0, const NFElem& zeta,
                                   const HermitianForm& form);

// Hyperbolic distance between the points represented by two negative
// vectors: d = 2 arccosh sqrt( <V,W><W,V> / (<V,V><W,W>) ). The ratio is
// computed exactly and only the final arccosh is floating point. Throws
// std::invalid_argument unless both vectors are negative.
double point_distance(const NFVec3& v, const NFVec3& w, const HermitianForm& form);

}  // namespace chlat
