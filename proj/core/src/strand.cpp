#include "cwl/strand.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

namespace {

// STU orientation convention: contracting legs at positions (p, p+1) into an
// internal vertex oriented (stem, p-side, p+1-side) equals T - U, where U is
// T with the two positions transposed. Pinned by the cross-product identity
// chi(I)*chi(I) = chi(I^2 + phi/6).
constexpr int kStuSign = 1;

void vec_add(StrandSpace::Vec& v, const StrandSpace::Vec& w, const Rational& scale) {
  for (const auto& [col, c] : w) {
    auto it = v.find(col);
    if (it == v.end()) {
      Rational val = c * scale;
      if (!val.is_zero()) v.emplace(col, val);
      continue;
    }
    it->second += c * scale;
    if (it->second.is_zero()) v.erase(it);
  }
}

void enumerate_involutions(std::vector<int>& pool, std::vector<std::pair<int, int>>& acc,
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
    enumerate_involutions(rest, acc, out);
    acc.pop_back();
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool every_component_meets_strand(const Character& c) {
  const int t = c.internal_count(), u = c.leg_count();
  UnionFind uf(t + u);
  auto vertex_of = [&](int dart) {
    return c.is_leg_dart(dart) ? t + (dart - 3 * t) : dart / 3;
  };
  for (int d = 0; d < c.dart_count(); ++d) uf.unite(vertex_of(d), vertex_of(c.partner(d)));
  std::vector<char> has_leg(static_cast<size_t>(t + u), 0);
  for (int j = 0; j < u; ++j) has_leg[uf.find(t + j)] = 1;
  for (int v = 0; v < t; ++v)
    if (!has_leg[uf.find(v)]) return false;
  return true;
}

}  // namespace

const StrandSpace& StrandSpace::instance() {
  static const StrandSpace space;
  return space;
}

StrandSpace::StrandSpace() {
  // enumerate every strand diagram with at most 4 dashed vertices
  std::map<std::string, Character> found;
  for (int t = 0; t <= 3; ++t) {
    for (int u = (t == 0 ? 0 : 1); 3 * t + u <= 12 && t + u <= 4; ++u) {
      if ((t + u) % 2 != 0 || (3 * t + u) % 2 != 0) continue;
      std::vector<int> labels(static_cast<size_t>(u));
      std::iota(labels.begin(), labels.end(), 1);
      std::vector<int> darts(static_cast<size_t>(3 * t + u));
      std::iota(darts.begin(), darts.end(), 0);
      std::vector<std::vector<std::pair<int, int>>> involutions;
      std::vector<std::pair<int, int>> acc;
      enumerate_involutions(darts, acc, involutions);
      for (const auto& edges : involutions) {
        Character c(t, labels, edges);
        if (!every_component_meets_strand(c)) continue;
        CanonicalForm cf = canonicalize(c);
        if (cf.sign == 0) continue;
        found.emplace(cf.key, cf.character);
      }
    }
  }
  for (auto& [key, c] : found) {
    index_.emplace(key, static_cast<int>(basis_.size()));
    basis_degree_.push_back(c.degree());
    basis_legs_.push_back(c.leg_count());
    basis_.push_back(std::move(c));
  }

  // STU instances from every basis diagram and adjacent position pair
  for (int bi = 0; bi < basis_size(); ++bi) {
    const Character& T = basis_[static_cast<size_t>(bi)];
    const int t = T.internal_count(), u = T.leg_count();
    for (int p = 1; p + 1 <= u; ++p) {
      // canonical order keeps legs sorted by label, so label q sits at q-1
      const int lp = p - 1, lq = p;
      // U: transpose the two positions
      std::vector<int> swapped = T.leg_labels();
      std::swap(swapped[static_cast<size_t>(lp)], swapped[static_cast<size_t>(lq)]);
      std::vector<int> upartner(static_cast<size_t>(T.dart_count()));
      for (int d = 0; d < T.dart_count(); ++d) upartner[static_cast<size_t>(d)] = T.partner(d);
      const Character U =
          Character::from_involution(t, std::move(swapped), std::move(upartner));

      // S: contract the pair into a new internal vertex (stem, p-side, p+1-side)
      const int dp = T.leg_dart(lp), dq = T.leg_dart(lq);
      const int a = T.partner(dp), b = T.partner(dq);
      const int nu = u - 1;  // surviving legs + stem
      auto map_dart = [&](int d) {
        if (d < 3 * t) return d;
        const int j = d - 3 * t;
        return 3 * (t + 1) + (j < lp ? j : j - 2);
      };
      std::vector<int> np(static_cast<size_t>(3 * (t + 1) + nu), -1);
      for (int d = 0; d < T.dart_count(); ++d) {
        if (d == dp || d == dq) continue;
        const int pd = T.partner(d);
        if (pd == dp || pd == dq) continue;
        np[static_cast<size_t>(map_dart(d))] = map_dart(pd);
      }
      const int stem_dart = 3 * (t + 1) + (nu - 1);
      np[static_cast<size_t>(3 * t)] = stem_dart;
      np[static_cast<size_t>(stem_dart)] = 3 * t;
      if (a == dq) {
        np[static_cast<size_t>(3 * t + 1)] = 3 * t + 2;
        np[static_cast<size_t>(3 * t + 2)] = 3 * t + 1;
      } else {
        np[static_cast<size_t>(3 * t + 1)] = map_dart(a);
        np[static_cast<size_t>(map_dart(a))] = 3 * t + 1;
        np[static_cast<size_t>(3 * t + 2)] = map_dart(b);
        np[static_cast<size_t>(map_dart(b))] = 3 * t + 2;
      }
      std::vector<int> slabels;
      for (int j = 0; j < u; ++j) {
        if (j == lp || j == lq) continue;
        const int label = T.leg_label(j);
        slabels.push_back(label > p + 1 ? label - 1 : label);
      }
      slabels.push_back(p);
      const Character S = Character::from_involution(t + 1, std::move(slabels), std::move(np));

      Vec rel = vec_of(S);
      vec_add(rel, Vec{{bi, Rational(1)}}, Rational(-kStuSign));
      vec_add(rel, vec_of(U), Rational(kStuSign));
      if (!rel.empty()) relations_.push_back(std::move(rel));
    }
  }

  // exact RREF over the rationals
  for (const Vec& raw : relations_) {
    Vec row = reduce(raw);
    if (row.empty()) continue;
    const int pivot = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [col, c] : row) c /= lead;
    for (auto& existing : rref_) {
      auto it = existing.find(pivot);
      if (it == existing.end()) continue;
      const Rational factor = it->second;
      vec_add(existing, row, -factor);
    }
    pivot_row_[pivot] = static_cast<int>(rref_.size());
    rref_.push_back(std::move(row));
  }
}

int StrandSpace::dimension(int degree) const {
  int count = 0;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_degree_[i] == degree) ++count;
  for (const auto& [pivot, row] : pivot_row_)
    if (basis_degree_[static_cast<size_t>(pivot)] == degree) --count;
  return count;
}

StrandSpace::Vec StrandSpace::vec_of(const Character& strand_diagram) const {
  if (strand_diagram.degree() > 2)
    throw PreconditionError("strand space only supports degree <= 2");
  CanonicalForm cf = canonicalize(strand_diagram);
  if (cf.sign == 0) return {};
  auto it = index_.find(cf.key);
  if (it == index_.end())
    throw PreconditionError("diagram outside the strand basis (components must meet the strand)");
  return {{it->second, Rational(cf.sign)}};
}

StrandSpace::Vec StrandSpace::reduce(const Vec& v) const {
  Vec out = v;
  for (const auto& [pivot, rowidx] : pivot_row_) {
    auto it = out.find(pivot);
    if (it == out.end()) continue;
    const Rational factor = it->second;
    vec_add(out, rref_[static_cast<size_t>(rowidx)], -factor);
  }
  return out;
}

StrandSpace::Vec StrandSpace::chi(const Character& x) const {
  if (x.degree() > 2) throw PreconditionError("chi: degree > 2 unsupported");
  const int k = x.leg_count();
  for (int j = 1; j < k; ++j)
    if (x.leg_label(j) != x.leg_label(0))
      throw PreconditionError("chi: all legs must carry one label");
  std::vector<int> positions(static_cast<size_t>(k));
  std::iota(positions.begin(), positions.end(), 1);
  Vec sum;
  int count = 0;
  do {
    std::vector<int> partner(static_cast<size_t>(x.dart_count()));
    for (int d = 0; d < x.dart_count(); ++d) partner[static_cast<size_t>(d)] = x.partner(d);
    const Character attached =
        Character::from_involution(x.internal_count(), positions, std::move(partner));
    vec_add(sum, vec_of(attached), Rational(1));
    ++count;
  } while (std::next_permutation(positions.begin(), positions.end()));
  Vec avg;
  vec_add(avg, sum, Rational(1) / Rational(count));
  return reduce(avg);
}

StrandSpace::Vec StrandSpace::juxtapose(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, ca] : a) {
    for (const auto& [j, cb] : b) {
      if (basis_degree_[static_cast<size_t>(i)] + basis_degree_[static_cast<size_t>(j)] > 2)
        throw PreconditionError("juxtapose: degree overflow");
      const Character shifted =
          with_shifted_labels(basis_[static_cast<size_t>(j)], basis_legs_[static_cast<size_t>(i)]);
      vec_add(out, vec_of(disjoint_union(basis_[static_cast<size_t>(i)], shifted)), ca * cb);
    }
  }
  return reduce(out);
}

std::string StrandSpace::str(const Vec& v) const {
  if (v.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [col, c] : v) os << c << " * basis[" << col << "]\n";
  return os.str();
}

}  // namespace cwl
