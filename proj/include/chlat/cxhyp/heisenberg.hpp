#pragma once

// The Heisenberg group and its rotation extension, as it appears in the
// stabilizer of a cusp: elements (z, t, zeta) acting on the boundary by
// X -> (z,t) * (zeta X), with (z,t)*(z',t') = (z+z', t+t'+2 Im(z conj(z'))).
//
// Vertical coordinates are stored as tau = i*t (purely imaginary), so that
// every coordinate lives in the CM field itself: t is real and generally not
// a field element, but i*t is whenever the element arises from a matrix over
// the field. Invariants: conj(tau) = -tau, zeta conj(zeta) = 1.
//
// The matrix representative (in a cusp basis where the Hermitian form is a
// real multiple of antidiag(1,1,1)) is
//     M(z,tau,zeta) = [ 1  -conj(z) zeta  (tau - z conj(z))/2 ]
//                     [ 0        zeta              z          ]
//                     [ 0          0               1          ]
// and multiplication of representatives matches heisenberg_mul exactly.

#include <chlat/cxhyp/matrix.hpp>
#include <chlat/exact/number_field.hpp>
#include <chlat/exact/rat.hpp>
#include <chlat/exact/smith.hpp>

namespace chlat {

struct HeisenbergElement {
  NFElem z;     // horizontal part
  NFElem tau;   // i * (vertical part); conj(tau) = -tau
  NFElem zeta;  // rotation part; zeta conj(zeta) = 1, 1 for pure translations

  bool is_translation() const { return zeta.is_one(); }
  bool is_vertical() const { return z.is_zero() && zeta.is_one(); }
  bool is_identity() const { return z.is_zero() && tau.is_zero() && zeta.is_one(); }

  bool operator==(const HeisenbergElement& o) const {
    return z == o.z && tau == o.tau && zeta == o.zeta;
  }
  bool operator!=(const HeisenbergElement& o) const { return !(*this == o); }

  std::string to_string() const;
};

// Validates the invariants; throws std::invalid_argument on violation.
HeisenbergElement make_heisenberg(const NFElem& z, const NFElem& tau, const NFElem& zeta);
// Pure translation (z, tau); rotation part 1.
HeisenbergElement heisenberg_translation(const NFElem& z, const NFElem& tau);
// Vertical translation (0, tau).
HeisenbergElement heisenberg_vertical(const NFElem& tau);
HeisenbergElement heisenberg_identity();

// Semidirect group law: (z,tau,zeta)*(z',tau',zeta') =
//   (z + zeta z', tau + tau' + (x - conj(x)), zeta zeta') with x = z conj(zeta z').
// For zeta = zeta' = 1 this is the Heisenberg law t'' = t + t' + 2 Im(z conj(z')).
HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& a);
HeisenbergElement heisenberg_pow(const HeisenbergElement& a, long e);

// Upper-triangular matrix representative (see file comment).
NFMat3 heisenberg_matrix(const HeisenbergElement& h);

// Self-intersection of the boundary elliptic curve from cusp translations:
// with [A,B] = Z^k, returns -|k|. Requires A, B pure translations whose
// commutator is a nontrivial vertical translation, and Z a nontrivial
// vertical translation with tau([A,B]) an integer multiple of tau(Z).
// Throws std::invalid_argument otherwise.
Int self_intersection_from_commutator(const HeisenbergElement& a, const HeisenbergElement& b,
                                      const HeisenbergElement& z);

// Self-intersection from the abelianization of the cusp group: invariants
// must be Z^2 + Z_q (q >= 1, i.e. free rank 2 and at most one torsion
// summand); returns -q. Throws std::invalid_argument otherwise.
Int self_intersection_from_abelianization(const AbelianInvariants& inv);

}  // namespace chlat
