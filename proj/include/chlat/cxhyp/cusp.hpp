#pragma once

// Cusp analysis: given matrices that are supposed to stabilize a common
// boundary point, find the common null fixed vector, conjugate everything
// into a normalized upper-triangular form, read off the Heisenberg data
// (z, tau, zeta per generator), and decide neatness (all generators
// unipotent).
//
// The change of basis Q = [V | W | U] is normalized so that Q* H Q is a
// real positive multiple of antidiag(1,1,1): V the common null fixed
// vector, W a positive vector orthogonal to V, U a null vector orthogonal
// to W with <U,V> = <W,W>. In that basis every (projectively) unitary
// upper-triangular matrix with equal corner eigenvalues, scaled to
// top-left entry 1, is exactly the Heisenberg representative
// M(z,tau,zeta), and the readout is direct: zeta = T(2,2), z = T(2,3),
// tau = 2 T(1,3) + z conj(z).

#include <chlat/cxhyp/heisenberg.hpp>
#include <chlat/cxhyp/hermitian.hpp>
#include <chlat/cxhyp/matrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chlat {

struct CuspAnalysis {
  NFVec3 vertex;                       // common null fixed vector
  NFMat3 q;                            // change of basis (columns V, W, U)
  NFMat3 q_inv;
  std::vector<NFMat3> triangular;      // normalized Q^-1 A Q, top-left entry 1
  std::vector<HeisenbergElement> heis; // per-generator (z, tau, zeta)
  std::vector<bool> unipotent;         // per-generator unipotence
  bool neat = false;                   // all generators unipotent
  std::optional<Int> self_intersection;  // set by downstream cusp certification

  std::string report() const;
};

// Throws std::invalid_argument with a diagnostic when the generators do not
// form a cusp group: no common fixed line, common fixed line not null, a
// generator without a repeated eigenvalue over the field, or a generator
// loxodromic at the cusp (distinct corner eigenvalues).
CuspAnalysis cusp_analyze(const std::vector<ProjUnitaryMatrix>& gens,
                          const HermitianForm& form);

}  // namespace chlat
