#pragma once

// Plain-text catalog of lattice records: parser and validation.
// The format is documented in docs/catalog-format.md.

#include <chlat/latcat/record.hpp>

#include <map>
#include <string>
#include <vector>

namespace chlat::latcat {

struct Catalog {
  std::map<std::string, NumberFieldPtr> fields;  // by field name
  std::vector<LatticeRecord> records;            // in file order

  const LatticeRecord* find(const std::string& slug) const;
  const LatticeRecord& require(const std::string& slug) const;  // throws if absent
};

// Parses the catalog and runs the load-time invariants on every record:
// unknown keys are rejected, digit words must parse, and when a record has a
// matrix model every presentation relator must evaluate to a scalar matrix.
// Throws std::runtime_error naming the record and field on any violation.
Catalog load_catalog(const std::string& path);

// Deeper per-record validation.
//   errors: failed checks (claimed value disagrees with a computed one).
//   notes: checks that were skipped and why (e.g. no matrix model).
struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> notes;
  bool ok() const { return errors.empty(); }
};

// Checks, where data permits:
//   - stated LCM consistent with isotropy orders, lopt well-defined;
//   - abelianization of a complete presentation equals the stated one;
//   - isotropy orders: with a matrix model, exact closure enumeration of the
//     projectivized subgroup when the claimed order is <= order_bound
//     (orders of finite subgroups of an infinite group are not computable
//     from the presentation alone, so without a model this is skipped with
//     a note);
//   - cusp relations evaluate to projective identities in the matrix model;
//   - every cusp braid relation of length 6 satisfies the centrality facts
//     ((ab)^3 commutes with a and b) in the exact Heisenberg screw model of
//     the (3,3,3) cusp group;
//   - non-cocompact records carry at least one cusp.
ValidationReport validate(const LatticeRecord& rec, long order_bound = 1000);

}  // namespace chlat::latcat
