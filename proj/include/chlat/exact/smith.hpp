#pragma once

// Smith normal form over Z and finitely generated abelian invariants.

#include <chlat/exact/rat.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace chlat {

struct IntMat {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
  static IntMat identity(size_t n);

  Int& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);

// U * A * V = S with S diagonal, nonnegative, d1 | d2 | ... The diagonal is
// returned in full length min(rows, cols) including trailing zeros. U and V
// are unimodular; they are computed only when with_transforms is set.
struct SmithResult {
  std::vector<Int> diag;
  IntMat U, V;
  bool with_transforms = false;
};

SmithResult smith_normal_form(IntMat A, bool with_transforms = false);

// Invariants of the cokernel Z^cols / (row span of A): the quotient is
// Z_{t1} x ... x Z_{tk} x Z^free with 1 < t1 | t2 | ... | tk.
struct AbelianInvariants {
  std::vector<Int> torsion;
  size_t free_rank = 0;

  bool operator==(const AbelianInvariants& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  Int torsion_order() const;  // product of torsion orders (1 if none)

  // Canonical text form: "1", "Z^2", "Z_3 x Z_6", "Z_3 x Z_6 x Z^2", ...
  std::string to_string() const;
  static AbelianInvariants parse(const std::string& s);
};

AbelianInvariants cokernel_invariants(const IntMat& relations);

}  // namespace chlat
