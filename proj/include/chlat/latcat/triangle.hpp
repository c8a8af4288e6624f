#pragma once

// Triangle rotation groups D(p,q,r) = <x,y | x^p, y^q, (xy)^r> together with
// an exact faithful 3x3 reflection model over the real cyclotomic field
// Q(2 cos(pi/lcm(p,q,r))).
//
// The model is the geometric (Tits) representation of the Coxeter group
// W(p,q,r) on the basis e1, e2, e3 of mirror normals: the reflection s_i
// sends e_i to -e_i and e_j to e_j + 2 cos(pi/m_ij) e_i.  The rotation
// generators are x = s1 s2 (order exactly p), y = s2 s3 (order exactly q),
// and x y = s1 s3 (order exactly r); relators evaluate to the exact identity
// matrix and the representation is faithful for every geometry type, so word
// equality in D(p,q,r) is decided by exact matrix equality.  The matrices
// preserve the symmetric bilinear form with Gram matrix
//   [[2, -l_p, -l_r], [-l_p, 2, -l_q], [-l_r, -l_q, 2]],  l_m = 2 cos(pi/m),
// which has signature (2,1) exactly when 1/p + 1/q + 1/r < 1.

#include <chlat/cxhyp/matrix.hpp>
#include <chlat/exact/number_field.hpp>
#include <chlat/groups/presentation.hpp>

namespace chlat::latcat {

enum class TriangleGeometry { spherical, euclidean, hyperbolic };

struct TriangleTarget {
  int p = 0, q = 0, r = 0;
  TriangleGeometry geometry = TriangleGeometry::hyperbolic;
  Presentation presentation;  // <x, y | x^p, y^q, (xy)^r>
  NumberFieldPtr field;               // Q(2 cos(pi/lcm(p,q,r)))
  NFMat3 x, y;                        // exact generator matrices
  NFMat3 form;                        // invariant symmetric Gram matrix

  // Images of a word over {x=1, y=2} under the matrix model.
  NFMat3 evaluate(const Word& w) const;
};

// Builds the (p,q,r) rotation-group target; requires p, q, r >= 2.
TriangleTarget triangle_target(int p, int q, int r);

// Minimal index of a torsion-free (= surface) subgroup of the hyperbolic or
// Euclidean rotation group D(p,q,r): n0 = lcm(p,q,r), doubled in the
// hyperbolic case when n0 * |chi^orb| is odd (chi of a closed orientable
// surface is even).  Throws for spherical triples.
long triangle_tf_index(int p, int q, int r);

}  // namespace chlat::latcat
