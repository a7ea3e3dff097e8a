#include "cwl/pairing.hpp"

#include "cwl/char_algebra.hpp"
#include "cwl/errors.hpp"

namespace cwl {

namespace {

void matchings_rec(std::vector<int>& pool, std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (pool.empty()) {
    out.push_back(acc);
    return;
  }
  const int first = pool.front();
  for (size_t i = 1; i < pool.size(); ++i) {
    std::vector<int> rest;
    rest.reserve(pool.size() - 2);
    for (size_t j = 1; j < pool.size(); ++j)
      if (j != i) rest.push_back(pool[j]);
    acc.emplace_back(first, pool[i]);
    matchings_rec(rest, acc, out);
    acc.pop_back();
  }
}

// Joins the matched leg pairs of c: matched legs disappear, their former
// partner darts are joined into edges, and a pair whose darts already bound
// a common edge closes into a free circle.
Character join_legs(const Character& c, const std::vector<std::pair<int, int>>& pairs) {
  const int t = c.internal_count(), u = c.leg_count();
  std::vector<int> partner(static_cast<size_t>(c.dart_count()));
  for (int d = 0; d < c.dart_count(); ++d) partner[d] = c.partner(d);
  std::vector<char> dead(static_cast<size_t>(u), 0);
  int circles = c.circles();
  for (auto [x, y] : pairs) {
    const int dx = c.leg_dart(x), dy = c.leg_dart(y);
    const int px = partner[dx], py = partner[dy];
    dead[x] = dead[y] = 1;
    if (px == dy) {
      ++circles;
      continue;
    }
    partner[px] = py;
    partner[py] = px;
  }
  // compress out the dead legs
  std::vector<int> new_dart(static_cast<size_t>(c.dart_count()), -1);
  for (int d = 0; d < 3 * t; ++d) new_dart[d] = d;
  std::vector<int> labels;
  int next = 3 * t;
  for (int j = 0; j < u; ++j) {
    if (dead[j]) continue;
    new_dart[c.leg_dart(j)] = next++;
    labels.push_back(c.leg_label(j));
  }
  std::vector<int> np(static_cast<size_t>(next), -1);
  for (int d = 0; d < c.dart_count(); ++d) {
    if (new_dart[d] < 0) continue;
    np[new_dart[d]] = new_dart[partner[d]];
  }
  return Character::from_involution(t, std::move(labels), std::move(np), circles);
}

CharCombo join_term(const Character& c, const Rational& coeff, int label,
                    const PairingContext& ctx) {
  CharCombo out;
  const std::vector<int> legs = c.legs_with_label(label);
  for (const auto& matching : perfect_matchings(legs)) {
    Character joined = join_legs(c, matching);
    const int circles = joined.circles();
    out.insert(joined.with_circles(0), coeff * pow_int(ctx.circle_value, circles));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> perfect_matchings(const std::vector<int>& items) {
  if (items.size() % 2 != 0) throw DomainError("perfect matching of an odd set");
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> pool = items;
  std::vector<std::pair<int, int>> acc;
  matchings_rec(pool, acc, out);
  return out;
}

CharCombo join_all(const CharCombo& x, int label, const PairingContext& ctx) {
  CharCombo out;
  for (const auto& [key, term] : x.terms()) {
    if (term.character.legs_with_label(label).size() % 2 != 0)
      throw DomainError("join_all: odd number of legs with the joined label");
    out += join_term(term.character, term.coeff, label, ctx);
  }
  return out;
}

CharCombo join_exact(const CharCombo& x, int label, const PairingContext& ctx) {
  CharCombo out;
  for (const auto& [key, term] : x.terms()) {
    if (static_cast<int>(term.character.legs_with_label(label).size()) != 2 * ctx.n) continue;
    out += join_term(term.character, term.coeff, label, ctx);
  }
  return out;
}

CharCombo iota_n(const CharCombo& x, int num_labels, const PairingContext& ctx) {
  CharCombo acc = x;
  for (int label = 1; label <= num_labels; ++label) acc = join_exact(acc, label, ctx);
  return acc;
}

Rational theta_power_coefficient(const CharCombo& x, int n) {
  if (n < 0) throw DomainError("negative theta power");
  if (n == 0) return x.coefficient(unit_key());
  Character p = theta_graph();
  for (int i = 1; i < n; ++i) p = disjoint_union(p, theta_graph());
  CanonicalForm cf = canonicalize(p);
  return x.coefficient(cf.key) * Rational(cf.sign);
}

}  // namespace cwl
