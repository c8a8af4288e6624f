#pragma once

// The lattice catalog data model: one record per lattice triangle group,
// together with the derived quantities the pipeline consumes.

#include <chlat/cxhyp/hermitian.hpp>
#include <chlat/cxhyp/matrix.hpp>
#include <chlat/exact/number_field.hpp>
#include <chlat/exact/smith.hpp>
#include <chlat/groups/presentation.hpp>
#include <chlat/groups/word.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chlat::latcat {

struct IsotropyEntry {
  std::vector<Word> gens;  // words over the record's generators
  long claimed_order = 0;
};

struct CuspEntry {
  std::vector<Word> gens;      // ambient words generating the cusp subgroup
  Presentation relations;      // claimed presentation on local letters 1..k
};

struct CongruenceNote {
  long prime = 0;
  Int claimed_order;        // order of the congruence image
  std::string image_name;   // e.g. "PGU(3,5)"; may be empty
};

struct MatrixModel {
  NumberFieldPtr field;
  HermitianForm form;
  std::vector<NFMat3> generators;          // one per presentation generator
  std::map<std::string, NFMat3> aux;       // named auxiliary matrices
};

struct LargenessData {
  // Stated (p,q,r) quotient targets of Gamma_mu by the normal closures K of
  // {A1,A2,A3} and L of {A1,B2,B3}, and the stated subgroup index (recorded
  // as printed; it need not be the optimum).
  std::optional<std::array<int, 3>> mu_k_target;
  std::optional<std::array<int, 3>> mu_l_target;
  long printed_index = 0;
};

struct LatticeRecord {
  std::string slug;          // e.g. "mostow-6-0"
  std::string name;          // e.g. "Mostow(6,0)"
  std::string family;        // "mostow" | "sporadic" | "thompson"
  int p = 0;                 // order of the generating reflections
  std::string t_label;       // t, tau, or T-family label as printed
  Rat chi_orb;               // orbifold Euler characteristic
  bool cocompact = false;
  bool arithmetic = false;
  long claimed_lcm = 0;                  // stated LCM of isotropy orders
  AbelianInvariants claimed_ab;          // stated abelianization
  Presentation presentation;             // may be partial (see flag)
  bool presentation_complete = true;     // false: relators verified but not known exhaustive
  int two_k = 0;                         // 2k for Mostow records (0 = not stated)
  std::optional<long> exp_rr;            // override for the (R1 R2) exponent
  std::optional<long> exp_jrr;           // override for the (J R2 R1) exponent
  std::vector<IsotropyEntry> isotropy;
  std::vector<CuspEntry> cusps;
  std::optional<MatrixModel> model;
  std::optional<CongruenceNote> congruence;
  LargenessData largeness;
  std::map<std::string, std::vector<Word>> subgroups;  // named generator-word lists
  std::map<std::string, std::vector<Word>> wordlists;  // named word sequences (not subgroups)

  bool has_model() const { return model.has_value(); }
};

// One row of a subgroup table: the full certificate for one finite-index
// subgroup of a catalog group.
struct SubgroupReport {
  std::string parent;       // record slug
  long index = 0;
  long core_index = 0;      // index of the normal core
  Int quotient_order;       // order of the finite quotient used (0 = unknown)
  std::string quotient_name;
  AbelianInvariants ab;
  size_t b1 = 0;            // first Betti number
  bool torsion_free = false;
  bool neat = false;
  bool neat_known = false;  // false: neatness undetermined (no matrix model)
  long cusp_count = 0;
  std::vector<Int> self_intersections;  // one per cusp (value k of Z^2 + Z_|k|)
  Rat euler;                // index * chi_orb
};

// Presentation of Mostow's Gamma(p, t) on r1, r2, r3, j:
//   r2 = j r1 j^{-1},  r3 = j^{-1} r1 j,  r1^p,  j^3,  (r1 j)^{two_k},
//   (r1 r2)^{6p/(p-6)} and (r2 r1 j)^{2*two_k*p/((two_k-4)p - 2*two_k)}
// with either power relator omitted when its exponent has a nonpositive
// denominator, and br3(r1, r2).  Overrides replace the computed exponents;
// a non-integral computed exponent without an override is an error.
Presentation mostow_presentation(int p, int two_k, std::optional<long> exp_rr_override = {},
                                 std::optional<long> exp_jrr_override = {});

// Known lower bound for the index of a torsion-free subgroup: L = lcm of
// isotropy orders, tripled when the group is cocompact and L*chi_orb is not
// divisible by 3 (the Euler characteristic of a smooth compact quotient is
// divisible by 3).  Throws on inconsistent catalog data (L*chi_orb not an
// integer).
long lopt(const LatticeRecord& rec);

// index * chi_orb, exactly.
Rat euler_of_index(const LatticeRecord& rec, long index);

// The six standard generators of Gamma_mu as words over {r1, r2, r3, j}:
// A_j = (j^{-1} r_j r_{j+1})^{-1} and B_j = r_j^2, indices mod 3, returned
// in the order A1, A2, A3, B1, B2, B3.  Requires a Mostow-shaped record
// (generators r1, r2, r3, j).
std::vector<Word> gamma_mu_subgroup(const LatticeRecord& rec);

}  // namespace chlat::latcat
