#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "covering/hurwitz.hpp"
#include "covering/sampling.hpp"
#include "enumerate_generic.hpp"

using namespace covering;
using covering::testing::enumerate_generic;

namespace {

Constellation z_squared() {
  Perm t = Perm::transposition(2, 1, 2);
  return Constellation(2, {t, t});
}

Constellation z_power(int d) {
  std::vector<int> pts(d);
  for (int i = 0; i < d; ++i) pts[i] = i + 1;
  Perm c = Perm::cycle(d, pts);
  return Constellation(d, {c, inverse(c)});
}

}  // namespace

TEST_CASE("braid move conjugates and swaps") {
  Constellation c(3, {Perm::transposition(3, 1, 2), Perm::transposition(3, 2, 3),
                      Perm::cycle(3, {1, 2, 3})});
  Constellation moved = braid_move(c, 1);
  CHECK(moved.tuple()[0] == Perm::transposition(3, 1, 3));
  CHECK(moved.tuple()[1] == Perm::transposition(3, 1, 2));
  CHECK(moved.validate().ok);
}

TEST_CASE("braid moves invert each other and preserve invariants") {
  Rng rng(139);
  for (int trial = 0; trial < 200; ++trial) {
    Constellation c = random_constellation(
        rng, static_cast<int>(rng.range(2, 6)), static_cast<int>(rng.range(2, 5)));
    if (c.size() < 2) continue;
    int i = static_cast<int>(rng.range(1, c.size() - 1));
    Constellation m = braid_move(c, i);
    CHECK(braid_move_inverse(m, i) == c);
    CHECK(braid_move(braid_move_inverse(c, i), i) == c);
    CHECK(m.validate().ok);
    CHECK(m.degree() == c.degree());
    CHECK(m.genus() == c.genus());
    CHECK(m.passport() == c.passport());
    CHECK(m.product() == c.product());
  }
}

TEST_CASE("braid index bounds") {
  Constellation c = Constellation::generic_polynomial(3);
  CHECK_THROWS_AS(braid_move(c, 0), std::out_of_range);
  CHECK_THROWS_AS(braid_move(c, 3), std::out_of_range);
}

TEST_CASE("canonical form is a relabeling invariant") {
  Rng rng(149);
  for (int trial = 0; trial < 100; ++trial) {
    int d = static_cast<int>(rng.range(2, 6));
    Constellation c = random_constellation(rng, d, static_cast<int>(rng.range(2, 4)));
    Perm g = random_perm(rng, d);
    std::vector<Perm> relabeled;
    for (const Perm& p : c.tuple()) relabeled.push_back(conjugate(p, g));
    Constellation cg(d, std::move(relabeled));
    CHECK(canonical_form(c) == canonical_form(cg));
  }
}

TEST_CASE("z^2 orbit is a singleton") {
  HurwitzOrbit orbit = hurwitz_orbit(z_squared());
  CHECK(orbit.states.size() == 1);
  CHECK(orbit.exhausted);
}

TEST_CASE("budget caps flip the exhausted flag") {
  Constellation g3 = Constellation::generic_polynomial(3);
  OrbitBudget tight;
  tight.max_states = 1;
  HurwitzOrbit orbit = hurwitz_orbit(g3, tight);
  CHECK(orbit.states.size() == 1);
  CHECK_FALSE(orbit.exhausted);

  OrbitBudget zero;
  zero.max_states = 0;
  CHECK_THROWS_AS(hurwitz_orbit(g3, zero), std::invalid_argument);
}

TEST_CASE("orbit does not depend on the representative") {
  Constellation g4 = Constellation::generic_polynomial(4);
  HurwitzOrbit a = hurwitz_orbit(g4);
  HurwitzOrbit b = hurwitz_orbit(braid_move(g4, 2));
  REQUIRE(a.exhausted);
  REQUIRE(b.exhausted);
  std::set<CanonicalForm> sa(a.states.begin(), a.states.end());
  std::set<CanonicalForm> sb(b.states.begin(), b.states.end());
  CHECK(sa == sb);
}

TEST_CASE("all generic-polynomial constellations form one orbit (d=3,4)") {
  for (int d : {3, 4}) {
    std::vector<Constellation> all = enumerate_generic(d);
    REQUIRE_FALSE(all.empty());
    HurwitzOrbit orbit = hurwitz_orbit(Constellation::generic_polynomial(d));
    REQUIRE(orbit.exhausted);
    std::set<CanonicalForm> reached(orbit.states.begin(), orbit.states.end());
    std::set<CanonicalForm> enumerated;
    for (const Constellation& c : all) enumerated.insert(canonical_form(c));
    CHECK(reached == enumerated);
  }
}

TEST_CASE("same_hurwitz_class on generic polynomials") {
  Rng rng(151);
  Constellation a = random_generic_polynomial(rng, 3);
  Constellation b = random_generic_polynomial(rng, 3);
  CHECK(same_hurwitz_class(a, b) == Ternary::yes);

  CHECK(same_hurwitz_class(Constellation::generic_polynomial(3), z_power(3)) ==
        Ternary::no);  // passports differ
  CHECK(same_hurwitz_class(Constellation::generic_polynomial(3),
                           Constellation::generic_polynomial(4)) == Ternary::no);
}

TEST_CASE("equivalence is symmetric and transitive on certified answers") {
  Rng rng(157);
  for (int trial = 0; trial < 20; ++trial) {
    int d = static_cast<int>(rng.range(2, 4));
    Constellation a = random_generic_polynomial(rng, d);
    Constellation b = random_generic_polynomial(rng, d);
    Constellation c = random_generic_polynomial(rng, d);
    CHECK(same_hurwitz_class(a, b) == same_hurwitz_class(b, a));
    if (same_hurwitz_class(a, b) == Ternary::yes &&
        same_hurwitz_class(b, c) == Ternary::yes)
      CHECK(same_hurwitz_class(a, c) == Ternary::yes);
  }
}

TEST_CASE("tight budgets answer inconclusive") {
  Constellation g3 = Constellation::generic_polynomial(3);
  Constellation other = braid_move(g3, 1);
  OrbitBudget tiny;
  tiny.max_states = 1;
  Ternary t = same_hurwitz_class(g3, mirror(other), tiny);
  CHECK(t != Ternary::no);
}

TEST_CASE("symmetry of generic polynomials and power maps") {
  for (int d = 2; d <= 5; ++d)
    CHECK(is_symmetric(Constellation::generic_polynomial(d)) == Ternary::yes);
  for (int d = 2; d <= 6; ++d)
    CHECK(is_symmetric(z_power(d)) == Ternary::yes);
}

TEST_CASE("a real Blaschke-type monodromy is symmetric") {
  // degree-3 monodromy of a real rational map: all entries real means the
  // tuple is fixed by the mirror up to relabeling
  Constellation b(3, {Perm::transposition(3, 1, 2), Perm::transposition(3, 1, 2),
                      Perm::transposition(3, 2, 3), Perm::transposition(3, 2, 3)});
  REQUIRE(b.validate().ok);
  CHECK(is_symmetric(b) == Ternary::yes);
}

TEST_CASE("collection matching is greedy and reported") {
  CoveringCollection a;
  a.components.push_back({"p3", Constellation::generic_polynomial(3)});
  a.components.push_back({"z2", z_squared()});
  CoveringCollection b;
  b.components.push_back({"x", z_squared()});
  b.components.push_back({"y", Constellation::generic_polynomial(3)});

  CollectionMatch match = match_collections(a, b);
  CHECK(match.overall == Ternary::yes);
  REQUIRE(match.pairs.size() == 2);
  CHECK(match.pairs[0].left_label == "p3");
  CHECK(match.pairs[0].right_label == "y");
  CHECK(match.pairs[1].left_label == "z2");
  CHECK(match.pairs[1].right_label == "x");

  CoveringCollection c;
  c.components.push_back({"z3", z_power(3)});
  c.components.push_back({"z2", z_squared()});
  CHECK(match_collections(a, c).overall == Ternary::no);

  CoveringCollection d;
  d.components.push_back({"only", z_squared()});
  CHECK(match_collections(a, d).overall == Ternary::no);
}
