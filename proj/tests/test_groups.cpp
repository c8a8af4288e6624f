// Tests for words, presentations, coset enumeration, low-index subgroup
// search, subgroup presentations, abelianization, and normal cores.
//
// Wherever possible results are checked against an independent model:
// concrete permutation groups (closed by brute-force orbit enumeration),
// classical subgroup counts, and Hall's recursion for free-group subgroup
// numbers.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "chlat/groups/group_ops.hpp"
#include "chlat/groups/low_index.hpp"
#include "chlat/groups/presentation.hpp"
#include "chlat/groups/schreier.hpp"
#include "chlat/groups/todd_coxeter.hpp"
#include "chlat/groups/word.hpp"

using namespace chlat;

namespace {

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = Perm::identity(n);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      p.map[static_cast<size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()] - 1;
  return p;
}

// Brute-force order of the group generated by perms.
size_t closure_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  std::set<Perm> seen;
  std::vector<Perm> queue = {Perm::identity(gens[0].degree())};
  seen.insert(queue[0]);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (const Perm& g : gens) {
      Perm nxt = cur * g;
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return seen.size();
}

Word random_word(std::mt19937& rng, int ngens, int len) {
  std::uniform_int_distribution<int> g(1, ngens);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w;
  for (int i = 0; i < len; ++i) {
    int x = g(rng);
    w.push_back(sign(rng) ? x : -x);
  }
  return w;
}

// Number of conjugates of the subgroup a completed coset table describes:
// index of the normalizer, via the points whose stabilizer is exactly the
// base stabilizer.
size_t class_size(const Presentation& pres, const CosetTable& t) {
  SubgroupPresentation sub = reidemeister_schreier(pres, t, SimplifyOptions{false, 4, 4000});
  int fixed = 0;
  for (int c = 0; c < t.size(); ++c) {
    bool all = true;
    for (const Word& h : sub.gen_in_parent)
      if (t.act_word(c, h) != c) {
        all = false;
        break;
      }
    if (all) ++fixed;
  }
  REQUIRE(fixed > 0);
  REQUIRE(t.size() % fixed == 0);
  return static_cast<size_t>(t.size() / fixed);
}

}  // namespace

TEST_CASE("word operations") {
  REQUIRE(free_reduce({1, -1}) == Word{});
  REQUIRE(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  REQUIRE(free_reduce({1, 2, -2, 1}) == (Word{1, 1}));
  REQUIRE(cyclic_reduce({-2, 1, 1, 2}) == (Word{1, 1}));
  REQUIRE(cyclic_reduce({1, -1}) == Word{});
  REQUIRE(inverse_word({1, -2, 3}) == (Word{-3, 2, -1}));
  REQUIRE(word_power({1, 2}, 2) == (Word{1, 2, 1, 2}));
  REQUIRE(word_power({1}, -3) == (Word{-1, -1, -1}));
  REQUIRE(word_conjugate({2}, {1}) == (Word{1, 2, -1}));

  // braid relator: n letters on each side, "aba... = bab..."
  REQUIRE(braid_relator(2, 1, 2) == (Word{1, 2, -1, -2}));           // ab = ba
  REQUIRE(braid_relator(3, 1, 2) == (Word{1, 2, 1, -2, -1, -2}));    // aba = bab
  REQUIRE(braid_relator(4, 1, 2) == (Word{1, 2, 1, 2, -1, -2, -1, -2}));

  std::vector<std::string> names = {"r1", "r2", "j"};
  REQUIRE(word_to_string({1, 1, -3, 2}, names) == "r1^2 j^-1 r2");
  REQUIRE(word_to_string({}, names) == "1");
  REQUIRE(parse_word("r1^2 j^-1 r2", names) == (Word{1, 1, -3, 2}));
  REQUIRE(parse_word("(r1 j)^2", names) == (Word{1, 3, 1, 3}));
  REQUIRE(parse_word("(r1 j)^-2", names) == (Word{-3, -1, -3, -1}));
  REQUIRE(parse_word("r1 * r2 * r1^-1", names) == (Word{1, 2, -1}));
  REQUIRE(parse_word("1", names) == Word{});
  REQUIRE(parse_word("( r2 (j r1)^2 )^2", names) == (Word{2, 3, 1, 3, 1, 2, 3, 1, 3, 1}));
  REQUIRE_THROWS_AS(parse_word("q", names), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("r1^", names), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("(r1", names), std::invalid_argument);

  // print/parse round trip on random words
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    Word w = free_reduce(random_word(rng, 3, 12));
    REQUIRE(parse_word(word_to_string(w, names), names) == w);
  }

  REQUIRE(exponent_vector({1, 1, -2, 3, -1}, 3) == (std::vector<long>{1, -1, 1}));
}

TEST_CASE("coset enumeration of classical finite groups") {
  // cyclic
  for (int n : {1, 2, 5, 12}) {
    Presentation p = make_presentation({"a"}, {});
    p.relators.push_back(word_power({1}, n));
    TCResult r = todd_coxeter(p, {});
    REQUIRE(r.ok());
    REQUIRE(r.index == static_cast<size_t>(n));
  }
  // dihedral of order 2n
  for (int n : {2, 3, 4, 7, 12}) {
    Presentation p = make_presentation({"r", "s"}, {"s^2"});
    p.relators.push_back(word_power({1}, n));
    p.relators.push_back(word_power({1, 2}, 2));
    TCResult r = todd_coxeter(p, {});
    REQUIRE(r.ok());
    REQUIRE(r.index == static_cast<size_t>(2 * n));
  }
  // quaternion group of order 8
  {
    Presentation p = make_presentation({"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"});
    REQUIRE(todd_coxeter(p, {}).index == 8);
  }
  // (2,3,3), (2,3,4), (2,3,5) rotation triangle groups
  {
    Presentation p = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^3"});
    REQUIRE(todd_coxeter(p, {}).index == 12);
    p = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^4"});
    REQUIRE(todd_coxeter(p, {}).index == 24);
    p = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
    REQUIRE(todd_coxeter(p, {}).index == 60);
  }
  // Hurwitz quotient of (2,3,7): adding a fourth relator cuts the infinite
  // triangle group down to the simple group of order 168
  {
    Presentation p =
        make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^7", "(a^-1 b^-1 a b)^4"});
    TCResult r = todd_coxeter(p, {});
    REQUIRE(r.ok());
    REQUIRE(r.index == 168);
  }
}

TEST_CASE("coset enumeration against a concrete permutation model") {
  // Symmetric group S5 on the transposition (1 2) and 5-cycle (1 2 3 4 5):
  // braid/commutation presentation on the two generators.
  Presentation s5 = make_presentation(
      {"s", "c"}, {"s^2", "c^5", "(c s)^4", "(s c^-1 s c)^3", "(s c^-2 s c^2)^2"});
  std::vector<Perm> imgs = {perm_from_cycles(5, {{1, 2}}), perm_from_cycles(5, {{1, 2, 3, 4, 5}})};
  REQUIRE(!homomorphism_witness(s5, imgs, Perm::identity(5)).has_value());
  REQUIRE(closure_order(imgs) == 120);
  TCResult whole = todd_coxeter(s5, {});
  REQUIRE(whole.ok());
  REQUIRE(whole.index == 120);  // together these prove the presentation is S5

  // Random subgroups: the enumerated index must match the concrete one.
  std::mt19937 rng(777);
  for (int it = 0; it < 60; ++it) {
    std::uniform_int_distribution<int> nwords(1, 3), len(1, 8);
    std::vector<Word> sub;
    std::vector<Perm> sub_imgs;
    for (int k = nwords(rng); k > 0; --k) {
      Word w = random_word(rng, 2, len(rng));
      sub.push_back(w);
      sub_imgs.push_back(evaluate_word(w, imgs, Perm::identity(5)));
    }
    // order of the image subgroup via brute-force closure over coset action:
    // since the presentation is faithful, [G : H] = |G| / |H|.
    size_t sub_order = closure_order(sub_imgs);
    TCResult r = todd_coxeter(s5, sub);
    REQUIRE(r.ok());
    REQUIRE(r.index * sub_order == 120);
    r.table.validate(s5, sub);
  }

  // Alternating group A5 = (2,3,5) rotation group, images (1 2)(3 4), (1 3 5).
  Presentation a5 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
  std::vector<Perm> a5img = {perm_from_cycles(5, {{1, 2}, {3, 4}}),
                             perm_from_cycles(5, {{1, 3, 5}})};
  REQUIRE(!homomorphism_witness(a5, a5img, Perm::identity(5)).has_value());
  REQUIRE(closure_order(a5img) == 60);
  for (int it = 0; it < 60; ++it) {
    std::uniform_int_distribution<int> nwords(1, 2), len(1, 10);
    std::vector<Word> sub;
    std::vector<Perm> sub_imgs;
    for (int k = nwords(rng); k > 0; --k) {
      Word w = random_word(rng, 2, len(rng));
      sub.push_back(w);
      sub_imgs.push_back(evaluate_word(w, a5img, Perm::identity(5)));
    }
    size_t sub_order = closure_order(sub_imgs);
    TCResult r = todd_coxeter(a5, sub);
    REQUIRE(r.ok());
    REQUIRE(r.index * sub_order == 60);
  }
}

TEST_CASE("enumeration strategies agree and handle infinite groups") {
  // Both strategies must produce the identical standardized table.
  std::vector<Presentation> cases = {
      make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"}),
      make_presentation({"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"}),
      make_presentation({"r", "s"}, {"r^7", "s^2", "(r s)^2"}),
      make_presentation({"s", "c"},
                        {"s^2", "c^5", "(c s)^4", "(s c^-1 s c)^3", "(s c^-2 s c^2)^2"}),
  };
  std::mt19937 rng(4242);
  for (const Presentation& p : cases) {
    std::vector<std::vector<Word>> subgroup_choices = {{}, {random_word(rng, p.ngens(), 4)}};
    for (const auto& sub : subgroup_choices) {
      TCLimits hlt, felsch;
      felsch.felsch = true;
      TCResult r1 = todd_coxeter(p, sub, hlt);
      TCResult r2 = todd_coxeter(p, sub, felsch);
      REQUIRE(r1.ok());
      REQUIRE(r2.ok());
      REQUIRE(r1.table.flat() == r2.table.flat());
    }
  }

  // Infinite groups: enumeration of the trivial subgroup must give up
  // (never a wrong success), but finite-index subgroups still complete.
  TCLimits tiny;
  tiny.max_cosets = 300;
  tiny.max_steps = 5000;
  Presentation z = make_presentation({"a"}, {});
  REQUIRE(todd_coxeter(z, {}, tiny).status == TCStatus::undecided);
  TCResult five = todd_coxeter(z, {parse_word("a^5", {"a"})}, tiny);
  REQUIRE(five.ok());
  REQUIRE(five.index == 5);

  Presentation euclid = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^6"});
  REQUIRE(todd_coxeter(euclid, {}, tiny).status == TCStatus::undecided);

  Presentation f2 = make_presentation({"a", "b"}, {});
  TCResult idx2 = todd_coxeter(f2, {parse_word("a^2", {"a", "b"}), parse_word("b", {"a", "b"}),
                                    parse_word("a b a^-1", {"a", "b"})});
  REQUIRE(idx2.ok());
  REQUIRE(idx2.index == 2);
}

TEST_CASE("low index subgroup search matches classical counts") {
  // Z: one subgroup per index.
  {
    Presentation z = make_presentation({"a"}, {});
    auto subs = low_index_subgroups(z, 5);
    REQUIRE(subs.size() == 5);
    for (size_t i = 0; i < subs.size(); ++i)
      REQUIRE(subs[i].size() == static_cast<int>(i) + 1);
  }
  // Z^2: all subgroups normal; the number of index-n subgroups is the
  // divisor sum sigma(n): 1, 3, 4, 7, 6 for n = 1..5.
  {
    Presentation z2 = make_presentation({"a", "b"}, {"a b a^-1 b^-1"});
    auto subs = low_index_subgroups(z2, 5);
    std::map<int, int> by_index;
    for (const auto& t : subs) {
      ++by_index[t.size()];
      REQUIRE(class_size(z2, t) == 1);  // abelian: every subgroup normal
    }
    REQUIRE(by_index == (std::map<int, int>{{1, 1}, {2, 3}, {3, 4}, {4, 7}, {5, 6}}));
  }
  // Free group of rank 2: conjugacy classes at index 1, 2, 3 are 1, 3, 7;
  // total subgroup counts (sum of class sizes) must follow Hall's
  // recursion N_n = n n! - sum_{i<n} (n-i)! N_i: 1, 3, 13, 71.
  {
    Presentation f2 = make_presentation({"a", "b"}, {});
    auto subs = low_index_subgroups(f2, 4);
    std::map<int, int> classes;
    std::map<int, size_t> total;
    for (const auto& t : subs) {
      ++classes[t.size()];
      total[t.size()] += class_size(f2, t);
    }
    REQUIRE(classes[1] == 1);
    REQUIRE(classes[2] == 3);
    REQUIRE(classes[3] == 7);
    REQUIRE(total[1] == 1);
    REQUIRE(total[2] == 3);
    REQUIRE(total[3] == 13);
    REQUIRE(total[4] == 71);
    // every index-n subgroup of F2 is free of rank n + 1
    for (const auto& t : subs) {
      SubgroupPresentation sp = reidemeister_schreier(f2, t);
      REQUIRE(sp.pres.relators.empty());
      REQUIRE(sp.pres.ngens() == t.size() + 1);
    }
  }
  // S4: classes of subgroups by index (up to 12): one each of index
  // 1, 2, 3, 4, 8; three of index 6; two of index 12; 29 subgroups in all.
  {
    Presentation s4 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^4"});
    REQUIRE(todd_coxeter(s4, {}).index == 24);
    auto subs = low_index_subgroups(s4, 12);
    std::map<int, int> classes;
    size_t total = 0;
    for (const auto& t : subs) {
      ++classes[t.size()];
      total += class_size(s4, t);
      t.validate(s4, {});
    }
    REQUIRE(classes ==
            (std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 3}, {8, 1}, {12, 2}}));
    REQUIRE(total == 29);
    // cross-check each class with enumeration: |H| * index == 24
    for (const auto& t : subs) {
      SubgroupPresentation sp = reidemeister_schreier(s4, t);
      auto h = sp.pres.ngens() == 0 ? std::optional<size_t>(1) : group_order(sp.pres);
      REQUIRE(h.has_value());
      REQUIRE(*h * static_cast<size_t>(t.size()) == 24);
    }
  }
  // A5 up to index 12: the whole group, A4 (5), D10 (6), S3 (10), Z5 (12).
  {
    Presentation a5 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
    auto subs = low_index_subgroups(a5, 12);
    std::vector<int> sizes;
    for (const auto& t : subs) sizes.push_back(t.size());
    REQUIRE(sizes == (std::vector<int>{1, 5, 6, 10, 12}));
    std::vector<size_t> csizes;
    for (const auto& t : subs) csizes.push_back(class_size(a5, t));
    REQUIRE(csizes == (std::vector<size_t>{1, 5, 6, 10, 6}));
  }
  // determinism
  {
    Presentation f2 = make_presentation({"a", "b"}, {});
    auto s1 = low_index_subgroups(f2, 3);
    auto s2 = low_index_subgroups(f2, 3);
    REQUIRE(s1.size() == s2.size());
    for (size_t i = 0; i < s1.size(); ++i) REQUIRE(s1[i].flat() == s2[i].flat());
  }
}

TEST_CASE("subgroup presentations by rewriting") {
  // Index-2 subgroup of F2 is free of rank 3.
  {
    Presentation f2 = make_presentation({"a", "b"}, {});
    TCResult r = todd_coxeter(f2, {f2.parse("a^2"), f2.parse("b"), f2.parse("a b a^-1")});
    REQUIRE(r.index == 2);
    SubgroupPresentation sp = reidemeister_schreier(f2, r.table);
    REQUIRE(sp.pres.ngens() == 3);
    REQUIRE(sp.pres.relators.empty());
    // generators must actually lie in the subgroup
    for (const Word& g : sp.gen_in_parent) REQUIRE(r.table.act_word(0, g) == 0);
  }
  // Index-n subgroups of Z^2 are again Z^2.
  {
    Presentation z2 = make_presentation({"a", "b"}, {"a b a^-1 b^-1"});
    for (const auto& t : low_index_subgroups(z2, 4)) {
      SubgroupPresentation sp = reidemeister_schreier(z2, t);
      REQUIRE(abelianization(sp.pres).to_string() == "Z^2");
    }
  }
  // Point stabilizer of S4 acting on 4 points is S3.
  {
    Presentation s4 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^4"});
    TCResult r = todd_coxeter(s4, {s4.parse("b"), s4.parse("a b a b^-1 a")});
    // subgroup containing b (3-cycle) and a conjugate transposition
    REQUIRE(r.index == 4);
    SubgroupPresentation sp = reidemeister_schreier(s4, r.table);
    REQUIRE(group_order(sp.pres) == std::optional<size_t>(6));
    REQUIRE(abelianization(sp.pres).to_string() == "Z_2");
  }
  // Rewriting is faithful: random subgroup elements evaluate identically
  // through the parent generators and through the rewritten word.
  {
    Presentation a5 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
    std::vector<Perm> imgs = {perm_from_cycles(5, {{1, 2}, {3, 4}}),
                              perm_from_cycles(5, {{1, 3, 5}})};
    TCResult r = todd_coxeter(a5, {a5.parse("a b")});
    REQUIRE(r.index == 12);
    SubgroupPresentation sp = reidemeister_schreier(a5, r.table);
    REQUIRE(group_order(sp.pres) == std::optional<size_t>(5));
    std::vector<Perm> sub_imgs;
    for (const Word& g : sp.gen_in_parent)
      sub_imgs.push_back(evaluate_word(g, imgs, Perm::identity(5)));
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sp.gen_in_parent.size()) - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::uniform_int_distribution<int> nfac(1, 6);
    for (int it = 0; it < 200; ++it) {
      Word parent_word;
      for (int k = nfac(rng); k > 0; --k) {
        int i = pick(rng);
        Word g = sp.gen_in_parent[static_cast<size_t>(i)];
        if (sgn(rng)) g = inverse_word(g);
        parent_word = concat(parent_word, g);
      }
      Word rewritten = sp.rewrite(parent_word);
      Perm lhs = evaluate_word(parent_word, imgs, Perm::identity(5));
      Perm rhs = evaluate_word(rewritten, sub_imgs, Perm::identity(5));
      REQUIRE(lhs == rhs);
    }
    REQUIRE_THROWS_AS(sp.rewrite(a5.parse("a")), std::invalid_argument);
  }
  // Simplification is invariant: raw and simplified presentations give the
  // same group order and abelianization.
  {
    Presentation s4 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^4"});
    for (const auto& t : low_index_subgroups(s4, 8)) {
      SubgroupPresentation raw = reidemeister_schreier(s4, t, SimplifyOptions{false, 4, 4000});
      SubgroupPresentation simp = reidemeister_schreier(s4, t);
      if (simp.pres.ngens() == 0) {
        REQUIRE(static_cast<size_t>(t.size()) == 24);
        continue;
      }
      REQUIRE(group_order(raw.pres) == group_order(simp.pres));
      REQUIRE(abelianization(raw.pres) == abelianization(simp.pres));
    }
  }
}

TEST_CASE("abelianization invariants and coordinates") {
  REQUIRE(abelianization(make_presentation({"a", "b"}, {})).to_string() == "Z^2");
  REQUIRE(abelianization(make_presentation({"a"}, {"a^12"})).to_string() == "Z_12");
  REQUIRE(abelianization(make_presentation({"r", "s"}, {"r^4", "s^2", "(r s)^2"})).to_string() ==
          "Z_2 x Z_2");
  REQUIRE(abelianization(make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^4"})).to_string() ==
          "Z_2");
  REQUIRE(abelianization(make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"})).to_string() ==
          "1");
  // Z_m x Z_n in invariant-factor form is Z_gcd x Z_lcm.
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> mn(2, 30);
  for (int it = 0; it < 50; ++it) {
    int m = mn(rng), n = mn(rng);
    Presentation p = make_presentation({"a", "b"}, {"a b a^-1 b^-1"});
    p.relators.push_back(word_power({1}, m));
    p.relators.push_back(word_power({2}, n));
    long g = std::gcd(m, n), l = std::lcm(m, n);
    AbelianInvariants got = abelianization(p);
    AbelianInvariants want;
    if (g > 1) want.torsion.push_back(g);
    if (l > 1) want.torsion.push_back(l);
    REQUIRE(got == want);
  }
  // Coordinates: additive, invariant factors annihilate relators.
  for (int it = 0; it < 40; ++it) {
    std::uniform_int_distribution<int> nrel(1, 4), len(1, 8);
    Presentation p = make_presentation({"a", "b", "c"}, {});
    for (int k = nrel(rng); k > 0; --k) p.relators.push_back(random_word(rng, 3, len(rng)));
    AbelianizationData data = abelianization_data(p);
    for (const Word& r : p.relators) {
      for (const Int& y : data.coordinates(r)) REQUIRE(y == 0);
    }
    Word u = random_word(rng, 3, 10), v = random_word(rng, 3, 10);
    auto cu = data.coordinates(u), cv = data.coordinates(v), cuv = data.coordinates(concat(u, v));
    for (size_t j = 0; j < cu.size(); ++j) {
      Int sum = cu[j] + cv[j];
      if (data.factors[j] > 1) sum %= data.factors[j];
      if (sum < 0) sum += data.factors[j];
      if (data.factors[j] == 1) sum = 0;
      REQUIRE(cuv[j] == sum);
    }
    // free coordinates of the identity vanish
    REQUIRE(data.free_coordinates(concat(u, inverse_word(u))) ==
            std::vector<Int>(data.free_count, Int(0)));
  }
}

TEST_CASE("normal cores") {
  // Core of a non-normal subgroup of a simple group is trivial: the core
  // table is the regular representation.
  {
    Presentation a5 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
    TCResult r = todd_coxeter(a5, {a5.parse("a")});
    REQUIRE(r.index == 30);
    CosetTable core = normal_core_table(r.table);
    REQUIRE(core.size() == 60);
    core.validate(a5, {});
  }
  // Reflection subgroup of the dihedral group of order 12: trivial core.
  {
    Presentation d6 = make_presentation({"r", "s"}, {"r^6", "s^2", "(r s)^2"});
    TCResult r = todd_coxeter(d6, {d6.parse("s")});
    REQUIRE(r.index == 6);
    CosetTable core = normal_core_table(r.table);
    REQUIRE(core.size() == 12);
  }
  // A normal subgroup is its own core.
  {
    Presentation z6 = make_presentation({"a"}, {"a^6"});
    TCResult r = todd_coxeter(z6, {z6.parse("a^2")});
    REQUIRE(r.index == 2);
    CosetTable core = normal_core_table(r.table);
    REQUIRE(core.size() == 2);
    core.validate(z6, {});
  }
}

TEST_CASE("homomorphism witnesses") {
  Presentation s4 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^4"});
  std::vector<Perm> good = {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{2, 3, 4}})};
  REQUIRE(!homomorphism_witness(s4, good, Perm::identity(4)).has_value());
  REQUIRE(closure_order(good) == 24);
  std::vector<Perm> bad = {perm_from_cycles(4, {{1, 2, 3, 4}}), perm_from_cycles(4, {{2, 3, 4}})};
  auto w = homomorphism_witness(s4, bad, Perm::identity(4));
  REQUIRE(w.has_value());
  REQUIRE(*w == s4.parse("a^2"));
}
