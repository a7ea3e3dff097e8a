#include <doctest.h>

#include <numeric>
#include <vector>

#include "cwl/char_algebra.hpp"
#include "cwl/char_combo.hpp"
#include "cwl/character.hpp"
#include "cwl/errors.hpp"
#include "cwl/verify.hpp"

using namespace cwl;

TEST_CASE("AS flip at one vertex negates the theta graph") {
  const CanonicalForm base = canonicalize(theta_graph());
  const CanonicalForm flipped = canonicalize(with_flipped_vertex(theta_graph(), 0));
  CHECK(base.sign != 0);
  CHECK(flipped.key == base.key);
  CHECK(flipped.sign == -base.sign);
}

TEST_CASE("a tadpole vanishes") {
  // one trivalent vertex with a loop and an edge to a single leg
  const Character y_with_loop(1, {1}, {{0, 1}, {2, 3}});
  CHECK(canonicalize(y_with_loop).sign == 0);
}

TEST_CASE("canonicalization is idempotent on non-vanishing diagrams") {
  for (const Character& d : {theta_graph(), strut(2), tripod(1, 2, 3), hbar(1, 2), wheel2(1),
                             disjoint_union(hbar(1, 2), wheel2(2))}) {
    const CanonicalForm cf = canonicalize(d);
    REQUIRE(cf.sign != 0);
    const CanonicalForm again = canonicalize(cf.character);
    CHECK(again.sign == 1);
    CHECK(again.key == cf.key);
    CHECK(again.character == cf.character);
  }
}

TEST_CASE("canonical serialization format") {
  CHECK(canonicalize(theta_graph()).key ==
        "deg=1 legs=0 circ=0\n"
        "v0: (e0,e1,e2)\n"
        "v1: (e0,e1,e2)\n");
  CHECK(canonicalize(strut(1)).key ==
        "deg=1 legs=2 circ=0\n"
        "l0: label=1 -> e0\n"
        "l1: label=1 -> e0\n");
}

TEST_CASE("parallel-edge pairings carry the AS sign") {
  // exchanging which ends of a double edge pair with which is a single odd
  // swap at one vertex: same class, opposite sign
  const Character bubble_a(2, {1, 1}, {{0, 3}, {1, 4}, {2, 6}, {5, 7}});
  const Character bubble_b(2, {1, 1}, {{0, 4}, {1, 3}, {2, 6}, {5, 7}});
  const CanonicalForm a = canonicalize(bubble_a);
  const CanonicalForm b = canonicalize(bubble_b);
  CHECK(a.key == b.key);
  CHECK(a.sign == -b.sign);
  CHECK(a.sign != 0);

  const Character theta_a(2, {}, {{0, 3}, {1, 4}, {2, 5}});
  const Character theta_b(2, {}, {{0, 4}, {1, 3}, {2, 5}});
  CHECK(canonicalize(theta_a).sign == -canonicalize(theta_b).sign);
}

TEST_CASE("orientation-odd automorphisms force vanishing beyond tadpoles") {
  // a theta graph with one edge subdivided into a lollipop stem: swapping
  // the doubled-edge vertices is an odd automorphism, so AS kills it even
  // though no tadpole is present
  const Character lollipop(3, {1}, {{0, 9}, {1, 3}, {2, 6}, {4, 7}, {5, 8}});
  CHECK(canonicalize(lollipop).sign == 0);

  // the tetrahedron has only even automorphisms and survives
  const Character k4(4, {}, {{0, 3}, {1, 6}, {2, 9}, {4, 7}, {5, 10}, {8, 11}});
  CHECK(canonicalize(k4).sign != 0);
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(Character(1, {1}, {{0, 1}, {2, 2}}), StructuralError);   // self-paired dart
  CHECK_THROWS_AS(Character(1, {1}, {{0, 1}, {0, 2}}), StructuralError);   // dart reused
  CHECK_THROWS_AS(Character(1, {1}, {{0, 1}}), StructuralError);           // dangling darts
  CHECK_THROWS_AS(Character(0, {0}, {{0, 0}}), StructuralError);           // label below 1
  CHECK_THROWS_AS(Character(1, {1}, {{0, 7}, {1, 2}}), StructuralError);   // out of range
}

TEST_CASE("disjoint union adds degrees and commutes") {
  const Character two_thetas = disjoint_union(theta_graph(), theta_graph());
  CHECK(two_thetas.degree() == 2);
  CHECK(two_thetas.internal_count() == 4);

  const Character a = hbar(1, 2);
  const Character b = wheel2(3);
  CHECK(disjoint_union(a, b).degree() == a.degree() + b.degree());
  CHECK(canonicalize(disjoint_union(a, b)).key == canonicalize(disjoint_union(b, a)).key);
  CHECK(canonicalize(disjoint_union(a, b)).sign == canonicalize(disjoint_union(b, a)).sign);

  // empty diagram is the unit
  CHECK(canonicalize(disjoint_union(a, Character{})).key == canonicalize(a).key);
}

TEST_CASE("combo arithmetic") {
  const CharCombo x = CharCombo::single(hbar(1, 2), Rational(2, 3)) +
                      CharCombo::single(theta_graph(), Rational(-1, 4));
  CHECK(add(x, scale(Rational(-1), x)).empty());
  CHECK(scale(Rational(1, 2), CharCombo::single(theta_graph())) ==
        CharCombo::single(theta_graph(), Rational(1, 2)));

  const CharCombo u = CharCombo::single(strut(1), Rational(2)) +
                      CharCombo::single(wheel2(2), Rational(-1, 3));
  const CharCombo v = CharCombo::single(tripod(1, 2, 3)) + CharCombo::unit();
  const CharCombo w = CharCombo::single(theta_graph(), Rational(5));
  CHECK(product(u, v) == product(v, u));
  CHECK(product(product(u, v), w) == product(u, product(v, w)));
  CHECK(product(u, CharCombo::unit()) == u);
}

TEST_CASE("insertion folds AS signs and drops vanishing terms") {
  CharCombo x;
  x.insert(theta_graph(), Rational(1));
  x.insert(with_flipped_vertex(theta_graph(), 0), Rational(1));
  CHECK(x.empty());

  CharCombo y;
  y.insert(Character(1, {1}, {{0, 1}, {2, 3}}), Rational(7));  // tadpole
  CHECK(y.empty());

  CharCombo z;
  z.insert(theta_graph(), Rational(1, 2));
  CHECK_THROWS_AS(z.insert(theta_graph().with_circles(1), Rational(1)), StructuralError);
}

TEST_CASE("canonical form soundness under random relabelings") {
  SplitMix64 rng(0x5eedULL);
  auto shuffled = [&](int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (size_t i = p.size(); i > 1; --i)
      std::swap(p[i - 1], p[static_cast<size_t>(rng.range(0, static_cast<long>(i) - 1))]);
    return p;
  };
  int nonzero_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int t = static_cast<int>(rng.range(0, 4));
    int u = static_cast<int>(rng.range(0, 6));
    if ((t + u) % 2 != 0) u = u > 0 ? u - 1 : u + 1;
    std::vector<int> labels(static_cast<size_t>(u));
    for (int& l : labels) l = static_cast<int>(rng.range(1, 3));
    std::vector<int> darts(static_cast<size_t>(3 * t + u));
    std::iota(darts.begin(), darts.end(), 0);
    for (size_t i = darts.size(); i > 1; --i)
      std::swap(darts[i - 1], darts[static_cast<size_t>(rng.range(0, static_cast<long>(i) - 1))]);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i + 1 < darts.size(); i += 2) edges.emplace_back(darts[i], darts[i + 1]);
    const Character c(t, labels, edges);

    const CanonicalForm base = canonicalize(c);
    Character mutated = with_permuted_vertices(c, shuffled(t));
    mutated = with_permuted_legs(mutated, shuffled(u));
    int flips = 0;
    for (int v = 0; v < t; ++v)
      if (rng.range(0, 1) == 1) {
        mutated = with_flipped_vertex(mutated, v);
        ++flips;
      }
    const CanonicalForm moved = canonicalize(mutated);
    REQUIRE(moved.key == base.key);
    if (base.sign == 0) {
      REQUIRE(moved.sign == 0);
    } else {
      ++nonzero_seen;
      REQUIRE(moved.sign == (flips % 2 == 0 ? base.sign : -base.sign));
    }
  }
  CHECK(nonzero_seen > 100);  // the generator must exercise the signed path
}
