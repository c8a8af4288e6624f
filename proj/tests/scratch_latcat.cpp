// Scratch driver (not part of the test suite): sanity-check the tagged
// enumeration and the triangle matrix model before wiring them in.
#include <chlat/groups/given_gens.hpp>
#include <chlat/groups/group_ops.hpp>
#include <chlat/groups/schreier.hpp>
#include <chlat/groups/todd_coxeter.hpp>
#include <chlat/latcat/cyclotomic.hpp>
#include <chlat/latcat/triangle.hpp>

#include <iostream>

using namespace chlat;
using namespace chlat::latcat;

static void compare_case(const std::string& label, const Presentation& parent,
                         const std::vector<Word>& gens) {
  auto mtc = presentation_on_generators(parent, gens);
  auto tc = todd_coxeter(parent, gens, {});
  if (!tc.ok()) {
    std::cout << label << ": TC failed\n";
    return;
  }
  auto rs = reidemeister_schreier(parent, tc.table);
  auto ab1 = abelianization(mtc.presentation);
  auto ab2 = abelianization(rs.pres);
  std::cout << label << ": index mtc=" << mtc.index << " tc=" << tc.index
            << "  ngens=" << mtc.presentation.ngens()
            << " nrel=" << mtc.presentation.relators.size() << "  ab mtc=" << ab1.to_string()
            << " rs=" << ab2.to_string()
            << ((size_t(mtc.index) == size_t(tc.index) && ab1.to_string() == ab2.to_string()) ? "  OK" : "  MISMATCH")
            << "\n";
}

int main() {
  // A4 = <a,b | a^3, b^3, (ab)^2>, subgroup <ab> of order 2, index 6.
  compare_case("A4/<ab>", make_presentation({"a", "b"}, {"a^3", "b^3", "(a*b)^2"}),
               {parse_word("a*b", {"a", "b"})});
  // Free group F2, subgroup <a^2, b, aba^-1> of index 2 (rank 3).
  compare_case("F2/index2",
               Presentation{{"a", "b"}, {}},
               {Word{1, 1}, Word{2}, Word{1, 2, -1}});
  // S3 = <s,t | s^2, t^2, (st)^3>, subgroup <st> = A3, index 2.
  compare_case("S3/<st>", make_presentation({"s", "t"}, {"s^2", "t^2", "(s*t)^3"}),
               {Word{1, 2}});
  // Z6 = <a | a^6>, subgroup <a^4> = <a^2>, index 2.
  compare_case("Z6/<a^4>", make_presentation({"a"}, {"a^6"}), {Word{1, 1, 1, 1}});
  // Index 1: whole group on redundant generators.
  compare_case("A4/whole", make_presentation({"a", "b"}, {"a^3", "b^3", "(a*b)^2"}),
               {Word{1}, Word{2, 2}});

  // Triangle targets.
  for (auto [p, q, r] : {std::array<int, 3>{2, 3, 7}, {3, 8, 2}, {5, 5, 5}, {3, 3, 3}, {9, 9, 9},
                         {2, 3, 3}}) {
    auto t = triangle_target(p, q, r);
    // Verify orders are exact: x^k != I for 0 < k < p.
    bool exact_order = true;
    NFMat3 id = t.x * t.x.inverse();
    NFMat3 acc = id;
    for (int k = 1; k < p; ++k) {
      acc = acc * t.x;
      if (acc == id) exact_order = false;
    }
    NFMat3 accy = id;
    for (int k = 1; k < q; ++k) {
      accy = accy * t.y;
      if (accy == id) exact_order = false;
    }
    std::cout << "triangle(" << p << "," << q << "," << r << "): geometry="
              << int(t.geometry) << " field_deg=" << t.field->degree()
              << " exact_orders=" << (exact_order ? "yes" : "NO") << "\n";
  }
  for (auto [p, q, r] : {std::array<int, 3>{2, 3, 7}, {2, 3, 8}, {2, 3, 9}, {2, 3, 10},
                         {2, 3, 12}, {2, 3, 18}, {4, 4, 4}, {5, 5, 5}, {9, 9, 9}, {3, 3, 3},
                         {2, 5, 5}, {2, 8, 8}, {2, 6, 6}, {6, 6, 6}, {3, 4, 4}})
    std::cout << "tf_index(" << p << "," << q << "," << r << ") = " << triangle_tf_index(p, q, r)
              << "\n";
  return 0;
}
