#include "cwl/char_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "cwl/errors.hpp"

namespace cwl {

namespace {

// Orientation wiring of the stored generators, pinned by the calibration
// identities (see header). The tripod bit is unobservable (every formula in
// scope flips an even number of tripod vertices) and stays identity.
constexpr bool kHbarCrossWired = true;
constexpr bool kThetaCrossWired = true;
constexpr bool kWheelCrossWired = true;

void require_label(int i) {
  if (i < 1) throw DomainError("generator label must be >= 1");
}

}  // namespace

Character strut(int i) {
  require_label(i);
  return Character(0, {i, i}, {{0, 1}});
}

Character tripod(int i, int j, int k) {
  require_label(i);
  require_label(j);
  require_label(k);
  if (i == j || j == k || i == k)
    throw DomainError("tripod labels must be pairwise distinct");
  // vertex darts (0,1,2) -> legs i,j,k (darts 3,4,5)
  return Character(1, {i, j, k}, {{0, 3}, {1, 4}, {2, 5}});
}

Character hbar(int i, int j) {
  require_label(i);
  require_label(j);
  if (i == j) throw DomainError("hbar labels must be distinct");
  // vertices (0,1,2) and (3,4,5); bridge 2-5; legs i,j,i,j at darts 6,7,8,9
  if (kHbarCrossWired)
    return Character(2, {i, j, i, j}, {{0, 7}, {1, 6}, {2, 5}, {3, 8}, {4, 9}});
  return Character(2, {i, j, i, j}, {{0, 6}, {1, 7}, {2, 5}, {3, 8}, {4, 9}});
}

Character wheel2(int i) {
  require_label(i);
  // double edge between the two vertices, one i-leg on each
  if (kWheelCrossWired)
    return Character(2, {i, i}, {{0, 4}, {1, 3}, {2, 6}, {5, 7}});
  return Character(2, {i, i}, {{0, 3}, {1, 4}, {2, 6}, {5, 7}});
}

Character theta_graph() {
  if (kThetaCrossWired) return Character(2, {}, {{0, 4}, {1, 3}, {2, 5}});
  return Character(2, {}, {{0, 3}, {1, 4}, {2, 5}});
}

Character generator(const GeneratorKind& kind) {
  switch (kind.tag) {
    case GeneratorKind::Tag::Strut:
      return strut(kind.i);
    case GeneratorKind::Tag::Tripod:
      return tripod(kind.i, kind.j, kind.k);
    case GeneratorKind::Tag::HBar:
      return hbar(kind.i, kind.j);
    case GeneratorKind::Tag::Wheel2:
      return wheel2(kind.i);
    case GeneratorKind::Tag::Theta:
      return theta_graph();
  }
  throw DomainError("unreachable generator kind");
}

Rational b_coefficient(long framing, const Rational& a1) {
  return (Rational(2) + Rational(framing) * Rational(framing) - Rational(24) * a1) /
         Rational(48);
}

CharCombo log_character(const SurgeryPresentation& s, int n) {
  if (n < 1) throw PreconditionError("log_character: n must be >= 1");
  check_presentation(s);
  CharCombo out;
  for (int i = 1; i <= s.components; ++i) {
    if (s.framing(i) != 0) out.insert(strut(i), Rational(s.framing(i), 2));
  }
  if (n == 1) {
    for (const auto& [key, v] : s.mu3)
      out.insert(tripod(key[0], key[1], key[2]), Rational(-v));
    for (const auto& [key, v] : s.mu22) out.insert(hbar(key[0], key[1]), Rational(v, 2));
    for (int i = 1; i <= s.components; ++i)
      out.insert(wheel2(i), b_coefficient(s.framing(i), s.a1_of(i)));
  } else {
    // leg-budget counting: with mu_11 = mu_22 = 0 only W_12k and H_12 can
    // supply labels 1 and 2, and they exhaust the internal-vertex budget
    for (const auto& [key, v] : s.mu3)
      if (key[0] == 1 && key[1] == 2) out.insert(tripod(key[0], key[1], key[2]), Rational(-v));
    if (long v = s.mu22_at(1, 2); v != 0) out.insert(hbar(1, 2), Rational(v, 2));
  }
  return out;
}

LegBudget LegBudget::for_degree(int n, int num_labels) {
  LegBudget b;
  b.per_label = 2 * n;
  b.max_internal = 2 * n;
  b.labels.resize(static_cast<size_t>(num_labels));
  std::iota(b.labels.begin(), b.labels.end(), 1);
  return b;
}

namespace {

struct ExpTerm {
  const Character* character;
  Rational coeff;
  std::map<int, int> legs;
  int internal;
};

}  // namespace

CharCombo exp_truncated(const CharCombo& x, const LegBudget& budget) {
  std::vector<ExpTerm> terms;
  for (const auto& [key, term] : x.terms()) {
    ExpTerm t{&term.character, term.coeff, term.character.leg_count_by_label(),
              term.character.internal_count()};
    if (t.legs.empty() && t.internal == 0)
      throw DomainError("exp_truncated: term with no legs and no internal vertices");
    for (const auto& [label, cnt] : t.legs)
      if (std::find(budget.labels.begin(), budget.labels.end(), label) == budget.labels.end())
        throw DomainError("exp_truncated: term carries a label outside the budget");
    terms.push_back(std::move(t));
  }
  CharCombo out;
  std::map<int, int> remaining;
  for (int label : budget.labels) remaining[label] = budget.per_label;
  // simple value-passing recursion; sizes are tiny
  struct Rec {
    const std::vector<ExpTerm>& terms;
    CharCombo& out;
    void go(size_t idx, std::map<int, int> remaining, int internal_left, Rational coeff,
            Character acc) {
      if (idx == terms.size()) {
        for (const auto& [label, cnt] : remaining)
          if (cnt != 0) return;
        out.insert(acc, coeff);
        return;
      }
      const ExpTerm& t = terms[idx];
      go(idx + 1, remaining, internal_left, coeff, acc);
      for (int m = 1;; ++m) {
        internal_left -= t.internal;
        if (internal_left < 0) break;
        bool fits = true;
        for (const auto& [label, cnt] : t.legs) {
          auto it = remaining.find(label);
          if (it == remaining.end() || it->second < cnt) {
            fits = false;
            break;
          }
        }
        if (!fits) break;
        for (const auto& [label, cnt] : t.legs) remaining[label] -= cnt;
        coeff *= t.coeff / Rational(m);
        acc = disjoint_union(acc, *t.character);
        go(idx + 1, remaining, internal_left, coeff, acc);
      }
    }
  } rec{terms, out};
  rec.go(0, std::move(remaining), budget.max_internal, Rational(1), Character{});
  return out;
}

}  // namespace cwl
