#include <doctest.h>

#include "cwl/errors.hpp"
#include "cwl/lescop.hpp"
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

}  // namespace

TEST_CASE("b1 = 2 closed form") {
  SurgeryPresentation s;
  s.components = 3;
  s.framings = {0, 0, 1};
  s.mu3[{1, 2, 3}] = 1;
  s.a1.assign(3, Rational(0));
  CHECK(lambda_b2(s) == Rational(1));

  SurgeryPresentation t;
  t.components = 3;
  t.framings = {0, 0, 2};
  t.mu22[{1, 2}] = 5;
  t.a1.assign(3, Rational(0));
  CHECK(lambda_b2(t) == Rational(10));

  SurgeryPresentation zeros;
  zeros.components = 4;
  zeros.framings = {0, 0, -3, 2};
  zeros.a1.assign(4, Rational(0));
  CHECK(lambda_b2(zeros) == Rational(0));

  SUBCASE("preconditions") {
    SurgeryPresentation bad;
    bad.components = 1;
    bad.framings = {1};
    bad.a1 = {Rational(0)};
    CHECK_THROWS_AS(lambda_b2(bad), PreconditionError);

    SurgeryPresentation unnormalized;
    unnormalized.components = 3;
    unnormalized.framings = {1, 0, 0};
    unnormalized.a1.assign(3, Rational(0));
    CHECK_THROWS_AS(lambda_b2(unnormalized), PreconditionError);
  }
}

TEST_CASE("surgery formula fixtures") {
  CHECK(lambda_surgery(knot(1)) == Rational(0));    // S^3
  CHECK(lambda_surgery(knot(-1)) == Rational(0));   // S^3
  // Casson's surgery formula: +1 surgery on a knot gives Delta''(1)/2,
  // which is 1 for the trefoil
  CHECK(lambda_surgery(knot(1, Rational(1))) == Rational(1));
  CHECK(lambda_surgery(knot(0)) == Rational(-1, 12));  // S^1 x S^2
}

TEST_CASE("both lambda paths agree on random b1 = 2 presentations") {
  SplitMix64 rng(kDefaultSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const SurgeryPresentation s = random_b2_presentation(rng, 5);
    auto [normalized, perm] = normalize_b2(s);
    const Rational closed = lambda_b2(normalized);
    REQUIRE(closed == lambda_surgery(s));
    REQUIRE(closed == lambda_surgery(normalized));
  }
}

TEST_CASE("connected sums") {
  CHECK(lambda_connected_sum(Rational(1), 5) == Rational(5));
  CHECK(lambda_connected_sum(Rational(-7, 3), 1) == Rational(-7, 3));
  CHECK(lambda_connected_sum(Rational(0), 11) == Rational(0));

  // disjoint link data models connected sum; a b1 > 0 side kills the
  // symmetric term, so lambda multiplies by the other torsion order
  SplitMix64 rng(kDefaultSeed ^ 0x55ULL);
  for (int trial = 0; trial < 25; ++trial) {
    const SurgeryPresentation left = random_b2_presentation(rng, 4);
    SurgeryPresentation right;
    right.components = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < right.components; ++i) {
      long v = rng.range(-4, 3);
      if (v >= 0) ++v;
      right.framings.push_back(v);
      right.a1.push_back(Rational(rng.range(-2, 2)));
    }
    const Rational expected =
        lambda_connected_sum(lambda_surgery(left), derived_stats(right).torsion_order);
    REQUIRE(lambda_surgery(disjoint_presentation(left, right)) == expected);
    REQUIRE(lambda_surgery(disjoint_presentation(right, left)) == expected);
  }
}
