#include "cwl/character.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

Character::Character(int internal_count, std::vector<int> leg_labels,
                     const std::vector<std::pair<int, int>>& edges, int circles)
    : internal_(internal_count), leg_labels_(std::move(leg_labels)), circles_(circles) {
  partner_.assign(static_cast<size_t>(dart_count()), -1);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= dart_count() || b >= dart_count())
      throw StructuralError("edge end out of range");
    if (a == b) throw StructuralError("edge pairing a dart with itself");
    if (partner_[a] != -1 || partner_[b] != -1)
      throw StructuralError("dart used by two edges");
    partner_[a] = b;
    partner_[b] = a;
  }
  validate();
}

Character Character::from_involution(int internal_count, std::vector<int> leg_labels,
                                     std::vector<int> partner, int circles) {
  Character c;
  c.internal_ = internal_count;
  c.leg_labels_ = std::move(leg_labels);
  c.partner_ = std::move(partner);
  c.circles_ = circles;
  c.validate();
  return c;
}

void Character::validate() const {
  if (internal_ < 0) throw StructuralError("negative internal vertex count");
  if (circles_ < 0) throw StructuralError("negative circle count");
  for (int l : leg_labels_)
    if (l < 1) throw StructuralError("leg label must be >= 1");
  if (static_cast<int>(partner_.size()) != dart_count())
    throw StructuralError("involution size does not match dart count");
  for (int d = 0; d < dart_count(); ++d) {
    int p = partner_[d];
    if (p < 0 || p >= dart_count()) throw StructuralError("unpaired dart");
    if (p == d) throw StructuralError("dart paired with itself");
    if (partner_[p] != d) throw StructuralError("pairing is not an involution");
  }
}

Character Character::with_circles(int circles) const {
  Character c = *this;
  if (circles < 0) throw StructuralError("negative circle count");
  c.circles_ = circles;
  return c;
}

std::vector<int> Character::legs_with_label(int label) const {
  std::vector<int> out;
  for (int j = 0; j < leg_count(); ++j)
    if (leg_labels_[j] == label) out.push_back(j);
  return out;
}

std::map<int, int> Character::leg_count_by_label() const {
  std::map<int, int> out;
  for (int l : leg_labels_) ++out[l];
  return out;
}

Character disjoint_union(const Character& a, const Character& b) {
  const int ta = a.internal_count(), tb = b.internal_count();
  const int ua = a.leg_count(), ub = b.leg_count();
  auto map_a = [&](int d) { return d < 3 * ta ? d : 3 * (ta + tb) + (d - 3 * ta); };
  auto map_b = [&](int d) {
    return d < 3 * tb ? 3 * ta + d : 3 * (ta + tb) + ua + (d - 3 * tb);
  };
  std::vector<int> partner(static_cast<size_t>(3 * (ta + tb) + ua + ub), -1);
  for (int d = 0; d < a.dart_count(); ++d) partner[map_a(d)] = map_a(a.partner(d));
  for (int d = 0; d < b.dart_count(); ++d) partner[map_b(d)] = map_b(b.partner(d));
  std::vector<int> labels = a.leg_labels();
  labels.insert(labels.end(), b.leg_labels().begin(), b.leg_labels().end());
  return Character::from_involution(ta + tb, std::move(labels), std::move(partner),
                                    a.circles() + b.circles());
}

std::string render(const Character& c) {
  const int t = c.internal_count(), u = c.leg_count();
  std::vector<int> eid(static_cast<size_t>(c.dart_count()), -1);
  int next = 0;
  for (int d = 0; d < c.dart_count(); ++d) {
    int p = c.partner(d);
    eid[d] = eid[p] >= 0 ? eid[p] : next++;
  }
  std::ostringstream os;
  os << "deg=" << c.degree() << " legs=" << u << " circ=" << c.circles() << '\n';
  for (int v = 0; v < t; ++v)
    os << 'v' << v << ": (e" << eid[3 * v] << ",e" << eid[3 * v + 1] << ",e"
       << eid[3 * v + 2] << ")\n";
  for (int j = 0; j < u; ++j)
    os << 'l' << j << ": label=" << c.leg_label(j) << " -> e" << eid[c.leg_dart(j)] << '\n';
  return os.str();
}

namespace {

// dart permutations of one vertex; first three are even
constexpr std::array<std::array<int, 3>, 6> kPerm3 = {{
    {{0, 1, 2}}, {{1, 2, 0}}, {{2, 0, 1}},
    {{0, 2, 1}}, {{2, 1, 0}}, {{1, 0, 2}},
}};

// Exhaustive minimal-encoding search over internal-vertex orderings and
// orientation representatives, with prefix pruning. The encoding lists, per
// emitted dart, (partner kind, edge id) where kind is 0 for an internal
// partner and the leg label otherwise, and edge ids are first-occurrence
// numbers; it determines the graph completely, so signs are well defined.
// Legs are placed deterministically after the internal section (they carry
// no orientation and hence no sign).
class Canonicalizer {
 public:
  explicit Canonicalizer(const Character& g) : g_(g), t_(g.internal_count()), u_(g.leg_count()) {
    edge_of_.assign(static_cast<size_t>(g.dart_count()), -1);
    vertex_used_.assign(static_cast<size_t>(t_), 0);
    vertex_at_.assign(static_cast<size_t>(t_), -1);
    order_at_.assign(static_cast<size_t>(t_), {});
    enc_.reserve(static_cast<size_t>(6 * t_ + 2 * u_));
  }

  CanonicalForm run() {
    dfs(0, false);
    Character canon = rebuild();
    int sign = ambiguous_ ? 0 : (best_parity_ ? -1 : +1);
    return CanonicalForm{canon, sign, render(canon)};
  }

 private:
  // lexicographic state: tight == current prefix equals best prefix
  void dfs(int level, bool tight) {
    if (have_best_ && !tight) {
      // normalize: branches opened before the first leaf lack a comparison
      bool equal = true;
      for (size_t i = 0; i < enc_.size(); ++i) {
        if (enc_[i] < best_enc_[i]) {
          equal = false;
          break;
        }
        if (enc_[i] > best_enc_[i]) return;
      }
      tight = equal;
    }
    if (level == t_) {
      finish(tight);
      return;
    }
    // enumerate all (vertex, orientation) trials for this level and walk
    // them in ascending entry order: the first descent is then near-minimal
    // and everything past a greater trial can be dropped wholesale
    struct Trial {
      std::array<int, 6> entries;
      int vertex;
      int perm;
      bool operator<(const Trial& o) const {
        if (entries != o.entries) return entries < o.entries;
        if (vertex != o.vertex) return vertex < o.vertex;
        return perm < o.perm;
      }
    };
    std::vector<Trial> trials;
    trials.reserve(static_cast<size_t>(6 * (t_ - level)));
    for (int ov = 0; ov < t_; ++ov) {
      if (vertex_used_[ov]) continue;
      for (int pi = 0; pi < 6; ++pi) {
        const auto& perm = kPerm3[pi];
        const int next0 = next_edge_;
        Trial trial{{}, ov, pi};
        std::array<int, 3> touched{};
        for (int i = 0; i < 3; ++i) {
          const int d = 3 * ov + perm[i];
          const int p = g_.partner(d);
          const int kind = g_.is_leg_dart(p) ? g_.leg_label(p - 3 * t_) : 0;
          const int e = edge_of_[p] >= 0 ? edge_of_[p] : next_edge_++;
          edge_of_[d] = e;
          touched[i] = d;
          trial.entries[2 * i] = kind;
          trial.entries[2 * i + 1] = e;
        }
        for (int d : touched) edge_of_[d] = -1;
        next_edge_ = next0;
        trials.push_back(trial);
      }
    }
    std::sort(trials.begin(), trials.end());

    for (const Trial& trial : trials) {
      bool tight2 = tight;
      if (tight) {
        int cmp = 0;
        for (size_t i = 0; i < trial.entries.size() && cmp == 0; ++i) {
          const int bv = best_enc_[enc_.size() + i];
          cmp = trial.entries[i] < bv ? -1 : (trial.entries[i] > bv ? 1 : 0);
        }
        if (cmp > 0) break;  // sorted: every later trial is greater too
        if (cmp < 0) tight2 = false;
      }
      const size_t enc0 = enc_.size();
      const int next0 = next_edge_;
      const auto& perm = kPerm3[trial.perm];
      std::array<int, 3> order{};
      for (int i = 0; i < 3; ++i) {
        const int d = 3 * trial.vertex + perm[i];
        order[i] = d;
        edge_of_[d] = trial.entries[2 * i + 1];
        enc_.push_back(trial.entries[2 * i]);
        enc_.push_back(trial.entries[2 * i + 1]);
      }
      next_edge_ = std::max({next_edge_, trial.entries[1] + 1, trial.entries[3] + 1,
                             trial.entries[5] + 1});
      vertex_used_[trial.vertex] = 1;
      vertex_at_[level] = trial.vertex;
      order_at_[level] = order;
      parity_ ^= (trial.perm >= 3);
      dfs(level + 1, tight2);
      parity_ ^= (trial.perm >= 3);
      vertex_used_[trial.vertex] = 0;
      for (int i = 0; i < 3; ++i) edge_of_[3 * trial.vertex + perm[i]] = -1;
      next_edge_ = next0;
      enc_.resize(enc0);
    }
  }

  void finish(bool tight) {
    if (have_best_ && tight) {
      // the leg section is a deterministic function of the internal section,
      // so an equal internal prefix means a fully equal encoding
      if (parity_ != best_parity_) ambiguous_ = true;
      return;
    }
    // strictly smaller (or first) assignment: emit legs and take over
    const size_t enc0 = enc_.size();
    const int next0 = next_edge_;
    std::vector<int> touched;
    leg_order_.clear();
    place_legs(touched);
    best_enc_ = enc_;
    best_parity_ = parity_;
    best_vertex_at_ = vertex_at_;
    best_order_at_ = order_at_;
    best_leg_order_ = leg_order_;
    ambiguous_ = false;
    have_best_ = true;
    for (int d : touched) edge_of_[d] = -1;
    next_edge_ = next0;
    enc_.resize(enc0);
  }

  void place_legs(std::vector<int>& touched) {
    std::vector<char> placed(static_cast<size_t>(u_), 0);
    std::set<int> labels(g_.leg_labels().begin(), g_.leg_labels().end());
    auto emit = [&](int leg) {
      const int d = g_.leg_dart(leg);
      const int p = g_.partner(d);
      const int e = edge_of_[p] >= 0 ? edge_of_[p] : next_edge_++;
      edge_of_[d] = e;
      touched.push_back(d);
      enc_.push_back(g_.leg_label(leg));
      enc_.push_back(e);
      placed[leg] = 1;
      leg_order_.push_back(leg);
    };
    for (int label : labels) {
      std::vector<std::pair<int, int>> numbered;  // (partner edge, leg)
      std::vector<std::pair<int, int>> cross;     // (partner label, leg)
      std::vector<int> struts;                    // same-label leg-leg pairs
      for (int j = 0; j < u_; ++j) {
        if (g_.leg_label(j) != label) continue;
        const int p = g_.partner(g_.leg_dart(j));
        if (edge_of_[p] >= 0) {
          numbered.emplace_back(edge_of_[p], j);
        } else if (g_.is_leg_dart(p)) {
          const int pl = g_.leg_label(p - 3 * t_);
          if (pl == label)
            struts.push_back(j);
          else
            cross.emplace_back(pl, j);
        } else {
          // internal partner not yet numbered: impossible, all internal darts
          // are emitted before legs
          throw StructuralError("internal dart missed by canonical search");
        }
      }
      std::sort(numbered.begin(), numbered.end());
      std::sort(cross.begin(), cross.end());
      for (auto& [e, j] : numbered) emit(j);
      for (auto& [pl, j] : cross) emit(j);
      for (int j : struts) {
        if (placed[j]) continue;
        emit(j);
        emit(g_.partner(g_.leg_dart(j)) - 3 * t_);
      }
    }
  }

  Character rebuild() const {
    std::vector<int> nd(static_cast<size_t>(g_.dart_count()), -1);
    for (int v = 0; v < t_; ++v)
      for (int i = 0; i < 3; ++i) nd[best_order_at_[v][i]] = 3 * v + i;
    std::vector<int> labels(static_cast<size_t>(u_));
    for (int j = 0; j < u_; ++j) {
      const int orig = best_leg_order_[j];
      nd[g_.leg_dart(orig)] = 3 * t_ + j;
      labels[j] = g_.leg_label(orig);
    }
    std::vector<int> partner(static_cast<size_t>(g_.dart_count()), -1);
    for (int d = 0; d < g_.dart_count(); ++d) partner[nd[d]] = nd[g_.partner(d)];
    return Character::from_involution(t_, std::move(labels), std::move(partner), g_.circles());
  }

  const Character& g_;
  int t_, u_;
  std::vector<int> edge_of_;
  std::vector<char> vertex_used_;
  std::vector<int> vertex_at_;
  std::vector<std::array<int, 3>> order_at_;
  std::vector<int> enc_;
  std::vector<int> leg_order_;
  int next_edge_ = 0;
  int parity_ = 0;

  bool have_best_ = false;
  bool ambiguous_ = false;
  int best_parity_ = 0;
  std::vector<int> best_enc_;
  std::vector<int> best_vertex_at_;
  std::vector<std::array<int, 3>> best_order_at_;
  std::vector<int> best_leg_order_;
};

}  // namespace

CanonicalForm canonicalize(const Character& d) { return Canonicalizer(d).run(); }

Character with_flipped_vertex(const Character& d, int v) {
  if (v < 0 || v >= d.internal_count()) throw DomainError("flip: no such vertex");
  std::vector<int> sigma(static_cast<size_t>(d.dart_count()));
  for (int i = 0; i < d.dart_count(); ++i) sigma[i] = i;
  std::swap(sigma[3 * v], sigma[3 * v + 1]);
  std::vector<int> partner(static_cast<size_t>(d.dart_count()), -1);
  for (int i = 0; i < d.dart_count(); ++i) partner[sigma[i]] = sigma[d.partner(i)];
  return Character::from_involution(d.internal_count(), d.leg_labels(), std::move(partner),
                                    d.circles());
}

Character with_permuted_vertices(const Character& d, const std::vector<int>& new_of_old) {
  const int t = d.internal_count();
  if (static_cast<int>(new_of_old.size()) != t) throw DomainError("bad vertex permutation");
  std::vector<int> sigma(static_cast<size_t>(d.dart_count()));
  for (int v = 0; v < t; ++v)
    for (int i = 0; i < 3; ++i) sigma[3 * v + i] = 3 * new_of_old[v] + i;
  for (int j = 0; j < d.leg_count(); ++j) sigma[d.leg_dart(j)] = d.leg_dart(j);
  std::vector<int> partner(static_cast<size_t>(d.dart_count()), -1);
  for (int i = 0; i < d.dart_count(); ++i) partner[sigma[i]] = sigma[d.partner(i)];
  return Character::from_involution(t, d.leg_labels(), std::move(partner), d.circles());
}

Character with_permuted_legs(const Character& d, const std::vector<int>& new_of_old) {
  const int u = d.leg_count();
  if (static_cast<int>(new_of_old.size()) != u) throw DomainError("bad leg permutation");
  std::vector<int> sigma(static_cast<size_t>(d.dart_count()));
  for (int i = 0; i < 3 * d.internal_count(); ++i) sigma[i] = i;
  std::vector<int> labels(static_cast<size_t>(u));
  for (int j = 0; j < u; ++j) {
    sigma[d.leg_dart(j)] = d.leg_dart(new_of_old[j]);
    labels[new_of_old[j]] = d.leg_label(j);
  }
  std::vector<int> partner(static_cast<size_t>(d.dart_count()), -1);
  for (int i = 0; i < d.dart_count(); ++i) partner[sigma[i]] = sigma[d.partner(i)];
  return Character::from_involution(d.internal_count(), std::move(labels), std::move(partner),
                                    d.circles());
}

Character with_shifted_labels(const Character& d, int delta) {
  std::vector<int> labels = d.leg_labels();
  for (int& l : labels) l += delta;
  std::vector<int> partner(static_cast<size_t>(d.dart_count()));
  for (int i = 0; i < d.dart_count(); ++i) partner[i] = d.partner(i);
  return Character::from_involution(d.internal_count(), std::move(labels), std::move(partner),
                                    d.circles());
}

}  // namespace cwl
