#include <doctest.h>

#include "cwl/errors.hpp"
#include "cwl/surgery.hpp"

using namespace cwl;

TEST_CASE("parsing a full document") {
  const auto s = parse_presentation(R"({
    "components": 3,
    "framings": [0, 0, 1],
    "mu3": [{"i": 1, "j": 2, "k": 3, "value": 1}],
    "mu22": [{"i": 1, "j": 2, "value": -4}],
    "a1": [0, "1/2", 2]
  })");
  CHECK(s.components == 3);
  CHECK(s.framing(3) == 1);
  CHECK(s.mu3_at(1, 2, 3) == 1);
  CHECK(s.mu3_at(1, 2, 2) == 0);
  CHECK(s.mu22_at(1, 2) == -4);
  CHECK(s.a1_of(2) == Rational(1, 2));
  CHECK(s.a1_of(3) == Rational(2));
}

TEST_CASE("defaults") {
  const auto s = parse_presentation(R"({"components": 1, "framings": [1]})");
  CHECK(s.mu3.empty());
  CHECK(s.mu22.empty());
  CHECK(s.a1_of(1) == Rational(0));
}

TEST_CASE("parse errors name the offending field") {
  auto expect_error = [](const char* doc, const char* needle) {
    try {
      parse_presentation(doc);
      FAIL_CHECK("expected a parse error for: " << doc);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(R"({"framings": [1]})", "components");
  expect_error(R"({"components": 0, "framings": []})", "components");
  expect_error(R"({"components": 1, "framings": [1, 2]})", "framings");
  expect_error(R"({"components": 1, "framings": [1.5]})", "framings[0]");
  expect_error(R"({"components": 1, "framings": [1], "bogus": 2})", "bogus");
  expect_error(R"({"components": 3, "framings": [0,0,1],
                   "mu3": [{"i": 2, "j": 1, "k": 3, "value": 1}]})",
               "i<j<k");
  expect_error(R"({"components": 3, "framings": [0,0,1],
                   "mu3": [{"i": 1, "j": 2, "k": 9, "value": 1}]})",
               "out of range");
  expect_error(R"({"components": 3, "framings": [0,0,1],
                   "mu3": [{"i": 1, "j": 2, "k": 3, "value": 1},
                           {"i": 1, "j": 2, "k": 3, "value": 2}]})",
               "duplicate");
  expect_error(R"({"components": 2, "framings": [0,0],
                   "mu22": [{"i": 2, "j": 2, "value": 1}]})",
               "i<j");
  expect_error(R"({"components": 1, "framings": [1], "a1": ["x"]})", "a1");
  expect_error(R"({"components": 1, "framings": [1], "a1": [1, 2]})", "a1");
  expect_error("not json at all", "JSON");
}

TEST_CASE("derived stats") {
  auto stats_of = [](std::vector<long> framings) {
    SurgeryPresentation s;
    s.components = static_cast<int>(framings.size());
    s.framings = std::move(framings);
    s.a1.assign(static_cast<size_t>(s.components), Rational(0));
    return derived_stats(s);
  };
  const DerivedStats a = stats_of({1});
  CHECK(a.b1 == 0);
  CHECK(a.sigma_plus == 1);
  CHECK(a.sigma_minus == 0);
  CHECK(a.h1_order == 1);

  const DerivedStats b = stats_of({0, 0, 1});
  CHECK(b.b1 == 2);
  CHECK(b.h1_order == 0);
  CHECK(b.torsion_order == 1);

  const DerivedStats c = stats_of({0, 0, -2, 3});
  CHECK(c.b1 == 2);
  CHECK(c.sigma_plus == 1);
  CHECK(c.sigma_minus == 1);
  CHECK(c.torsion_order == 6);
  CHECK(c.h1_order == 0);

  // with b1 = 0 the signed torsion product carries the sigma_minus sign
  const DerivedStats d = stats_of({-2, 3});
  CHECK(d.h1_order == 6);
  CHECK(d.sigma_minus == 1);
}

TEST_CASE("normalize_b2 moves the zero framings to labels 1 and 2") {
  SUBCASE("sorted-key transport") {
    SurgeryPresentation s;
    s.components = 3;
    s.framings = {1, 0, 0};
    s.mu3[{1, 2, 3}] = 7;
    s.a1 = {Rational(9), Rational(0), Rational(0)};
    auto [n, perm] = normalize_b2(s);
    CHECK(n.framings == std::vector<long>{0, 0, 1});
    CHECK(perm == std::vector<int>{3, 1, 2});
    CHECK(n.mu3_at(1, 2, 3) == 7);
    CHECK(n.a1_of(3) == Rational(9));
  }
  SUBCASE("already normalized input gets the identity permutation") {
    SurgeryPresentation s;
    s.components = 3;
    s.framings = {0, 0, 5};
    s.a1.assign(3, Rational(0));
    auto [n, perm] = normalize_b2(s);
    CHECK(perm == std::vector<int>{1, 2, 3});
    CHECK(n.framings == s.framings);
  }
  SUBCASE("pair keys transport along the permutation") {
    SurgeryPresentation s;
    s.components = 3;
    s.framings = {0, 1, 0};
    s.mu22[{1, 3}] = 5;
    s.a1.assign(3, Rational(0));
    auto [n, perm] = normalize_b2(s);
    CHECK(n.framings == std::vector<long>{0, 0, 1});
    CHECK(n.mu22_at(1, 2) == 5);
    CHECK(n.mu22.size() == 1);
  }
  SUBCASE("precondition") {
    SurgeryPresentation s;
    s.components = 2;
    s.framings = {0, 1};
    s.a1.assign(2, Rational(0));
    CHECK_THROWS_AS(normalize_b2(s), PreconditionError);
  }
}
