#include <doctest.h>

#include "cwl/char_algebra.hpp"
#include "cwl/errors.hpp"
#include "cwl/lescop.hpp"
#include "cwl/lmo.hpp"
#include "cwl/pairing.hpp"
#include "cwl/verify.hpp"

using namespace cwl;

namespace {

SurgeryPresentation knot(long framing, const Rational& a1 = Rational(0)) {
  SurgeryPresentation s;
  s.components = 1;
  s.framings = {framing};
  s.a1 = {a1};
  return s;
}

SurgeryPresentation b2_triple() {
  SurgeryPresentation s;
  s.components = 3;
  s.framings = {0, 0, 1};
  s.mu3[{1, 2, 3}] = 1;
  s.a1.assign(3, Rational(0));
  return s;
}

// regression fixtures: computed once by the matching-enumeration engine and
// frozen; the exact combinations are not tabulated anywhere else
constexpr const char* kH2Fixture =
    "1/8 *\n"
    "deg=2 legs=0 circ=0\n"
    "v0: (e0,e1,e2)\n"
    "v1: (e0,e1,e2)\n"
    "v2: (e3,e4,e5)\n"
    "v3: (e3,e4,e5)\n"
    "3/4 *\n"
    "deg=2 legs=0 circ=0\n"
    "v0: (e0,e1,e2)\n"
    "v1: (e0,e1,e3)\n"
    "v2: (e2,e4,e5)\n"
    "v3: (e3,e4,e5)\n"
    "1/4 *\n"
    "deg=2 legs=0 circ=0\n"
    "v0: (e0,e1,e2)\n"
    "v1: (e0,e3,e4)\n"
    "v2: (e1,e3,e5)\n"
    "v3: (e2,e4,e5)\n";

constexpr const char* kH3ThetaCubedCoefficient = "-1/48";

}  // namespace

TEST_CASE("U constants reproduce -(sign) + Theta/16 from raw surgery data") {
  CharCombo expect_plus = CharCombo::unit().scaled(Rational(-1));
  expect_plus.insert(theta_graph(), Rational(1, 16));
  CHECK(u_constant(+1) == expect_plus);

  CharCombo expect_minus = CharCombo::unit();
  expect_minus.insert(theta_graph(), Rational(1, 16));
  CHECK(u_constant(-1) == expect_minus);

  CHECK(u_constant(+1).coefficient(unit_key()) == Rational(-1));
  CHECK(u_constant(-1).coefficient(unit_key()) == Rational(1));
  CHECK_THROWS_AS(u_constant(2), PreconditionError);
}

TEST_CASE("c(L) closed form") {
  CHECK(c_of_l(knot(1)) == Rational(-1, 16));
  CHECK(c_of_l(knot(1, Rational(1))) == Rational(7, 16));
  CHECK(c_of_l(b2_triple()) == Rational(1, 2));
}

TEST_CASE("iota1 diagram path matches the closed form") {
  SUBCASE("framed unknot") {
    const CharCombo engine = iota1_check(knot(1));
    CHECK(engine == u_constant(+1));
  }
  SUBCASE("b1 = 2 example") {
    const CharCombo engine = iota1_check(b2_triple());
    CHECK(engine == CharCombo::single(theta_graph(), Rational(-1, 2)));
  }
  SUBCASE("everything zero, one component") {
    // only the constant wheel survives: c = -b(0,0) = -1/24, so the
    // degree <= 1 part is (-1)^1 (0 + c Theta) = +Theta/24 (the same sign
    // that the z1 identity forces for S^1 x S^2)
    const CharCombo engine = iota1_check(knot(0));
    CHECK(engine == CharCombo::single(theta_graph(), Rational(1, 24)));
  }
}

TEST_CASE("z1 fixtures") {
  CHECK(z1(knot(1)).theta_coefficient == Rational(0));
  CHECK(z1(knot(-1)).theta_coefficient == Rational(0));
  CHECK(z1(knot(1, Rational(1))).theta_coefficient == Rational(1, 2));
  CHECK(z1(knot(0)).theta_coefficient == Rational(1, 24));
  CHECK(z1(b2_triple()).theta_coefficient == Rational(1, 2));
}

TEST_CASE("theorem 2 identity on random presentations") {
  SplitMix64 rng(kDefaultSeed ^ 0x77ULL);
  for (int trial = 0; trial < 60; ++trial) {
    const SurgeryPresentation s = random_presentation(rng, 4);
    const DerivedStats st = derived_stats(s);
    const Rational expected = (st.b1 % 2 == 0 ? Rational(1) : Rational(-1)) *
                              lambda_surgery(s) / Rational(2);
    REQUIRE(z1(s).theta_coefficient == expected);
  }
}

TEST_CASE("H_n elements") {
  CHECK(h_n(1).combo == CharCombo::single(theta_graph(), Rational(1, 2)));
  CHECK(h_n(1).theta_projection == Rational(1, 2));
  CHECK(h_n(2).theta_projection == Rational(1, 8));
  CHECK(h_n(3).theta_projection == Rational(1, 48));
  CHECK_THROWS_AS(h_n(0), PreconditionError);
  CHECK_THROWS_AS(h_n(5), PreconditionError);

  SUBCASE("frozen regression fixtures") {
    CHECK(h_n(2).combo.str() == kH2Fixture);
    const Character theta3 = disjoint_union(disjoint_union(theta_graph(), theta_graph()),
                                            theta_graph());
    CHECK(h_n(3).combo.coefficient(canonicalize(theta3).key).str() ==
          kH3ThetaCubedCoefficient);
    CHECK(h_n(3).combo.size() == 7);
  }
}

TEST_CASE("degree-n part for b1 = 2 presentations") {
  SUBCASE("n = 1 agrees with z1 on the triple example") {
    const CharCombo out = zn_b2(b2_triple(), 1);
    CHECK(out == CharCombo::single(theta_graph(), Rational(1, 2)));
    CHECK(theta_power_coefficient(out, 1) == z1(b2_triple()).theta_coefficient);
  }
  SUBCASE("lambda = 0 kills every degree") {
    SurgeryPresentation s;
    s.components = 3;
    s.framings = {0, 0, 1};
    s.a1.assign(3, Rational(0));
    CHECK(zn_b2(s, 1).empty());
    CHECK(zn_b2(s, 2).empty());
  }
  SUBCASE("n = 2 with a quadruple invariant is 4 H_2") {
    SurgeryPresentation s;
    s.components = 3;
    s.framings = {0, 0, 2};
    s.mu22[{1, 2}] = 1;
    s.a1.assign(3, Rational(0));
    CHECK(zn_b2(s, 2) == h_n(2).combo.scaled(Rational(4)));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(zn_b2(knot(1), 1), PreconditionError);
    CHECK_THROWS_AS(zn_b2(b2_triple(), 4), PreconditionError);
  }
}

TEST_CASE("direct contraction path: cross-check and degree vanishing") {
  SplitMix64 rng(kDefaultSeed ^ 0x99ULL);
  for (int trial = 0; trial < 10; ++trial) {
    const SurgeryPresentation s = random_b2_presentation(rng, 4);
    auto [normalized, perm] = normalize_b2(s);
    const Rational lambda = lambda_b2(normalized);
    for (int n = 1; n <= 2; ++n) {
      const CharCombo direct = zn_b2_direct(normalized, n);
      REQUIRE(direct == h_n(n).combo.scaled(pow_int(lambda, n)));
      if (!direct.empty()) REQUIRE(direct.min_degree() == n);
    }
  }
}
