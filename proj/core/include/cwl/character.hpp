#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cwl {

/// Uni-trivalent multigraph: trivalent internal vertices carrying a cyclic
/// orientation of their three edge-ends, and univalent legs carrying a label
/// in {1..l}. Loops and parallel edges are allowed.
///
/// Dart layout: internal vertex v owns darts 3v, 3v+1, 3v+2; the stored order
/// is the vertex orientation (even permutations are the same orientation, odd
/// ones flip the sign). Leg j owns dart 3*internal_count()+j. partner() is the
/// fixed-point-free involution pairing darts into edges.
///
/// Free circle components (closed dashed loops with no vertex) are carried as
/// a plain count; they appear only transiently inside the pairing engine.
class Character {
 public:
  Character() = default;

  /// Edges are given as pairs of dart indices; every dart must appear in
  /// exactly one edge. Throws StructuralError on malformed input.
  Character(int internal_count, std::vector<int> leg_labels,
            const std::vector<std::pair<int, int>>& edges, int circles = 0);

  /// Rebuild from a raw involution array (same layout). Validates.
  static Character from_involution(int internal_count, std::vector<int> leg_labels,
                                   std::vector<int> partner, int circles = 0);

  int internal_count() const { return internal_; }
  int leg_count() const { return static_cast<int>(leg_labels_.size()); }
  int dart_count() const { return 3 * internal_ + leg_count(); }
  int degree() const { return (internal_ + leg_count()) / 2; }
  int circles() const { return circles_; }
  int leg_label(int leg) const { return leg_labels_[leg]; }
  const std::vector<int>& leg_labels() const { return leg_labels_; }
  int leg_dart(int leg) const { return 3 * internal_ + leg; }
  bool is_leg_dart(int dart) const { return dart >= 3 * internal_; }
  int partner(int dart) const { return partner_[dart]; }

  Character with_circles(int circles) const;
  std::vector<int> legs_with_label(int label) const;
  std::map<int, int> leg_count_by_label() const;

  bool operator==(const Character&) const = default;

 private:
  void validate() const;

  int internal_ = 0;
  std::vector<int> leg_labels_;
  std::vector<int> partner_;
  int circles_ = 0;
};

struct CanonicalForm {
  Character character;  ///< canonical representative (minimal encoding)
  int sign;             ///< +1/-1 AS sign relating the input to it; 0 if AS kills it
  std::string key;      ///< canonical text serialization; the stable map key
};

/// Minimizes over vertex relabelings and orientation representatives with
/// sign tracking. sign == 0 exactly when the diagram carries an
/// orientation-odd automorphism (a tadpole is the simplest case), which
/// forces it to vanish under AS.
CanonicalForm canonicalize(const Character& d);

/// Structural disjoint union; degrees add, labels and circles are preserved.
Character disjoint_union(const Character& a, const Character& b);

/// Text form: "deg=<d> legs=<k> circ=<c>" header, one "v<i>: (e<a>,e<b>,e<c>)"
/// line per internal vertex, one "l<j>: label=<m> -> e<k>" line per leg.
/// Edge numbers are first-occurrence in dart order.
std::string render(const Character& c);

// --- helpers used by tests and the verification suites ---

/// Reverses the cyclic order at one internal vertex (an AS flip).
Character with_flipped_vertex(const Character& d, int v);
/// Renames internal vertices; new_of_old[v] is v's new index.
Character with_permuted_vertices(const Character& d, const std::vector<int>& new_of_old);
/// Reorders leg storage (labels travel with their legs).
Character with_permuted_legs(const Character& d, const std::vector<int>& new_of_old);
/// Shifts every leg label by delta (used by the strand module).
Character with_shifted_labels(const Character& d, int delta);

}  // namespace cwl
