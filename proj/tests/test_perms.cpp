// Tests for stabilizer chains: group orders, membership, point stabilizers,
// transversals, coset actions, and conjugate-intersection checks.
//
// The main oracle is brute force: random generator sets inside S_6 are small
// enough to close by hand, so every chain-derived answer (order, membership,
// stabilizer order, coset cover) is compared against explicit element sets.
// Classical group orders (symmetric, alternating, dihedral, PSL(2,7), M_11)
// pin down the larger cases, and coset actions are cross-checked against
// coset enumeration over matching presentations.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "chlat/groups/group_ops.hpp"
#include "chlat/groups/presentation.hpp"
#include "chlat/groups/todd_coxeter.hpp"
#include "chlat/perms/perm.hpp"
#include "chlat/perms/perm_group.hpp"

using namespace chlat;

namespace {

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = Perm::identity(n);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      p.map[static_cast<size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()] - 1;
  return p;
}

std::set<Perm> closure(const std::vector<Perm>& gens, int degree) {
  std::set<Perm> seen;
  std::vector<Perm> queue = {Perm::identity(degree)};
  seen.insert(queue[0]);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (const Perm& g : gens) {
      Perm nxt = cur * g;
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return seen;
}

Perm random_perm(std::mt19937& rng, int n) {
  Perm p = Perm::identity(n);
  std::shuffle(p.map.begin(), p.map.end(), rng);
  return p;
}

unsigned long factorial(int n) {
  unsigned long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

TEST_CASE("classical group orders from stabilizer chains") {
  for (int n = 3; n <= 7; ++n) {
    std::vector<Perm> gens = {perm_from_cycles(n, {{1, 2}}), [&] {
                                std::vector<int> cyc;
                                for (int i = 1; i <= n; ++i) cyc.push_back(i);
                                return perm_from_cycles(n, {cyc});
                              }()};
    PermGroup sym(gens);
    CHECK(sym.order() == factorial(n));
    CHECK(sym.degree() == n);
  }

  // Alternating groups from the 3-cycles (1 2 k).
  for (int n = 4; n <= 7; ++n) {
    std::vector<Perm> gens;
    for (int k = 3; k <= n; ++k) gens.push_back(perm_from_cycles(n, {{1, 2, k}}));
    CHECK(PermGroup(gens).order() == factorial(n) / 2);
  }

  // Dihedral groups: rotation plus a reflection of the n-gon.
  for (int n = 3; n <= 12; ++n) {
    std::vector<int> rot;
    for (int i = 1; i <= n; ++i) rot.push_back(i);
    Perm refl = Perm::identity(n);
    for (int i = 0; i < n; ++i) refl.map[static_cast<size_t>(i)] = (n - i) % n;
    CHECK(PermGroup({perm_from_cycles(n, {rot}), refl}).order() == 2 * n);
  }

  // Cyclic groups.
  for (int n = 2; n <= 15; ++n) {
    std::vector<int> rot;
    for (int i = 1; i <= n; ++i) rot.push_back(i);
    CHECK(PermGroup({perm_from_cycles(n, {rot})}).order() == static_cast<unsigned long>(n));
  }

  // PSL(2,7) on the projective line over F_7: points 1..7 are 0..6, point 8
  // is infinity; generators x -> x+1 and x -> -1/x.
  Perm shift = perm_from_cycles(8, {{1, 2, 3, 4, 5, 6, 7}});
  Perm flip = perm_from_cycles(8, {{1, 8}, {2, 7}, {3, 4}, {5, 6}});
  PermGroup psl27({shift, flip});
  CHECK(psl27.order() == 168);

  // Mathieu group M_11 from its standard two generators.
  Perm a = perm_from_cycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  Perm b = perm_from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}});
  PermGroup m11({a, b});
  CHECK(m11.order() == 7920);
  // Sharply 4-transitive: iterated point stabilizers shrink by 11, 10, 9, 8.
  PermGroup s0 = m11.point_stabilizer(0);
  CHECK(s0.order() == 720);
  PermGroup s1 = s0.point_stabilizer(1);
  CHECK(s1.order() == 72);
  CHECK(s1.point_stabilizer(2).order() == 8);

  // The trivial group still knows its degree.
  PermGroup triv(std::vector<Perm>{}, 5);
  CHECK(triv.order() == 1);
  CHECK(triv.is_trivial());
  CHECK(triv.contains(Perm::identity(5)));
  CHECK_FALSE(triv.contains(perm_from_cycles(5, {{1, 2}})));
}

TEST_CASE("random subgroups of S_6 against brute force") {
  std::mt19937 rng(20260818);
  for (int trial = 0; trial < 120; ++trial) {
    int ngens = 1 + trial % 3;
    std::vector<Perm> gens;
    for (int i = 0; i < ngens; ++i) gens.push_back(random_perm(rng, 6));
    std::set<Perm> model = closure(gens, 6);
    PermGroup g(gens);

    REQUIRE(g.order() == static_cast<unsigned long>(model.size()));

    // Membership agrees with the element set, on members and non-members.
    for (int i = 0; i < 8; ++i) {
      Perm p = random_perm(rng, 6);
      CHECK(g.contains(p) == (model.count(p) > 0));
    }
    Perm inside = *std::next(model.begin(), static_cast<long>(rng() % model.size()));
    CHECK(g.contains(inside));

    // Orbit-stabilizer at every point.
    for (int pt = 0; pt < 6; ++pt) {
      PermGroup stab = g.point_stabilizer(pt);
      CHECK(stab.order() * static_cast<unsigned long>(g.orbit(pt).size()) == g.order());
      for (const Perm& s : stab.generators()) {
        CHECK(s(pt) == pt);
        CHECK(model.count(s) > 0);
      }
    }
  }
}

TEST_CASE("stabilizer chains are deterministic") {
  Perm a = perm_from_cycles(8, {{1, 2, 3, 4, 5, 6, 7}});
  Perm b = perm_from_cycles(8, {{1, 8}, {2, 7}, {3, 4}, {5, 6}});
  PermGroup g1({a, b});
  PermGroup g2({a, b});
  CHECK(g1.base() == g2.base());
  CHECK(g1.order() == g2.order());
  std::vector<Perm> t1 = g1.right_transversal(g1.point_stabilizer(0));
  std::vector<Perm> t2 = g2.right_transversal(g2.point_stabilizer(0));
  REQUIRE(t1.size() == t2.size());
  for (size_t i = 0; i < t1.size(); ++i) CHECK(t1[i] == t2[i]);
}

TEST_CASE("element enumeration") {
  Perm a = perm_from_cycles(4, {{1, 2}});
  Perm c = perm_from_cycles(4, {{1, 2, 3, 4}});
  PermGroup s4({a, c});
  std::vector<Perm> elems = s4.elements();
  CHECK(elems.size() == 24);
  CHECK(std::set<Perm>(elems.begin(), elems.end()).size() == 24);
  CHECK(elems[0].is_identity());
  for (const Perm& e : elems) CHECK(s4.contains(e));

  Perm t7 = perm_from_cycles(7, {{1, 2}});
  Perm c7 = perm_from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}});
  CHECK_THROWS(PermGroup({t7, c7}).elements(1000));
}

TEST_CASE("right transversals cover each coset once") {
  std::mt19937 rng(96321);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Perm> gens = {random_perm(rng, 6), random_perm(rng, 6)};
    PermGroup g(gens);
    if (g.order() > 400) continue;
    std::vector<Perm> all = g.elements();

    // A subgroup from random elements of g.
    std::vector<Perm> hgens = {all[rng() % all.size()], all[rng() % all.size()]};
    PermGroup h(hgens);

    std::vector<Perm> reps = g.right_transversal(h);
    REQUIRE(h.order() * static_cast<unsigned long>(reps.size()) == g.order());
    CHECK(reps[0].is_identity());

    // Every element of g lies in exactly one right coset h * rep.
    for (const Perm& x : all) {
      int hits = 0;
      for (const Perm& r : reps)
        if (h.contains(x * r.inverse())) ++hits;
      CHECK(hits == 1);
    }
    ++checked;
  }
  REQUIRE(checked >= 20);

  Perm a = perm_from_cycles(5, {{1, 2, 3, 4, 5}});
  PermGroup c5({a});
  PermGroup s3 = PermGroup({perm_from_cycles(5, {{1, 2}}), perm_from_cycles(5, {{1, 2, 3}})});
  CHECK_THROWS_AS(c5.right_transversal(s3), std::invalid_argument);
}

TEST_CASE("coset actions match coset enumeration over a presentation") {
  struct Case {
    Presentation pres;
    std::vector<Perm> images;
    std::vector<std::vector<Word>> subgroups;
  };
  std::vector<Case> cases;

  // S_4 as the (2,3,4) triangle rotation group.
  {
    Presentation p = make_presentation({"a", "b"}, {"a^2", "b^3", "(a*b)^4"});
    std::vector<Perm> images = {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{2, 3, 4}})};
    cases.push_back({p, images, {{}, {p.parse("a")}, {p.parse("b")},
                                 {p.parse("a*b")}, {p.parse("a"), p.parse("b*a*b^-1")}}});
  }
  // A_5 as the (2,3,5) triangle rotation group.
  {
    Presentation p = make_presentation({"a", "b"}, {"a^2", "b^3", "(a*b)^5"});
    std::vector<Perm> images = {perm_from_cycles(5, {{1, 2}, {3, 4}}), perm_from_cycles(5, {{1, 3, 5}})};
    cases.push_back({p, images, {{p.parse("a")}, {p.parse("b")},
                                 {p.parse("a*b")}, {p.parse("a"), p.parse("b^-1*a*b")}}});
  }

  for (const Case& c : cases) {
    REQUIRE_FALSE(homomorphism_witness(c.pres, c.images, Perm::identity(c.images[0].degree())).has_value());
    PermGroup image(c.images);
    // The images present the same group: orders agree.
    TCResult full = todd_coxeter(c.pres, {});
    REQUIRE(full.ok());
    REQUIRE(image.order() == static_cast<unsigned long>(full.index));

    for (const std::vector<Word>& sub : c.subgroups) {
      std::vector<Perm> sub_images;
      for (const Word& w : sub)
        sub_images.push_back(evaluate_word(w, c.images, Perm::identity(c.images[0].degree())));
      PermGroup s(sub_images, c.images[0].degree());

      CosetTable via_perms = coset_action(c.images, s);
      TCResult via_tc = todd_coxeter(c.pres, sub);
      REQUIRE(via_tc.ok());
      REQUIRE(via_perms.size() == via_tc.table.size());
      CHECK(via_perms.flat() == via_tc.table.flat());
      // Standardized by construction.
      CHECK(via_perms.standardized().flat() == via_perms.flat());
    }
  }

  // Against the trivial subgroup the table is the regular representation.
  Perm r = perm_from_cycles(3, {{1, 2, 3}});
  CosetTable reg = coset_action({r}, PermGroup(std::vector<Perm>{}, 3));
  CHECK(reg.size() == 3);
  CHECK(reg.act(0, 1) == 1);
  CHECK(reg.act(1, 1) == 2);
  CHECK(reg.act(2, 1) == 0);
}

TEST_CASE("conjugate intersections") {
  // In A_5: a 5-cycle subgroup meets every conjugate of an involution
  // trivially (odd order), but an A_4 point stabilizer contains one.
  std::vector<Perm> a5gens = {perm_from_cycles(5, {{1, 2}, {3, 4}}), perm_from_cycles(5, {{1, 3, 5}})};
  PermGroup a5(a5gens);
  REQUIRE(a5.order() == 60);

  PermGroup c5({perm_from_cycles(5, {{1, 2, 3, 4, 5}})});
  PermGroup a4({perm_from_cycles(5, {{1, 2, 3}}), perm_from_cycles(5, {{1, 2}, {3, 4}})});
  REQUIRE(a4.order() == 12);
  std::vector<Perm> invol = {perm_from_cycles(5, {{1, 2}, {3, 4}})};

  CHECK(conj_intersection_trivial(c5, invol, a5.right_transversal(c5)));
  CHECK_FALSE(conj_intersection_trivial(a4, invol, a5.right_transversal(a4)));
  // A subgroup never misses a conjugate of itself.
  CHECK_FALSE(conj_intersection_trivial(c5, c5.generators(), a5.right_transversal(c5)));
  // Trivial isotropy passes vacuously.
  CHECK(conj_intersection_trivial(a4, {}, a5.right_transversal(a4)));

  // Brute-force cross-check on random instances inside S_5.
  std::mt19937 rng(777);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Perm> gens = {random_perm(rng, 5), random_perm(rng, 5)};
    PermGroup g(gens);
    if (g.order() > 150) continue;
    std::vector<Perm> all = g.elements();

    PermGroup s({all[rng() % all.size()], all[rng() % all.size()]});
    std::vector<Perm> igens = {all[rng() % all.size()]};
    PermGroup iso(igens, 5);

    bool expect = true;
    for (const Perm& x : all) {
      Perm xi = x.inverse();
      for (const Perm& u : iso.elements())
        if (!u.is_identity() && s.contains(x * u * xi)) expect = false;
    }
    CHECK(conj_intersection_trivial(s, igens, g.right_transversal(s)) == expect);
    ++checked;
  }
  REQUIRE(checked >= 30);
}
