#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwl/char_combo.hpp"
#include "cwl/character.hpp"
#include "cwl/rational.hpp"

namespace cwl {

/// Diagrams on one solid strand in degree <= 2, as an explicit linear
/// quotient by the STU relations. A strand diagram is represented as a
/// Character whose legs carry their strand positions 1..k as labels (so the
/// graph canonicalizer applies verbatim: positions never permute).
///
/// The basis enumerates every AS-nonzero diagram with at most four dashed
/// vertices whose every dashed component meets the strand; STU instances are
/// generated from each basis diagram and adjacent position pair, and the
/// quotient is an exact Gaussian elimination over the rationals. Built once,
/// then cached immutably.
class StrandSpace {
 public:
  using Vec = std::map<int, Rational>;  // basis index -> coefficient

  static const StrandSpace& instance();

  int basis_size() const { return static_cast<int>(basis_.size()); }
  int dimension(int degree) const;  ///< quotient dimension in one degree
  const Character& basis_diagram(int index) const { return basis_[static_cast<size_t>(index)]; }

  /// Signed coordinates of one strand diagram (empty when AS kills it).
  Vec vec_of(const Character& strand_diagram) const;

  /// Canonical coset representative modulo the STU span.
  Vec reduce(const Vec& v) const;
  Vec stu_reduce(const Character& d) const { return reduce(vec_of(d)); }

  /// Symmetrization: average of all ways of attaching the legs of a
  /// character (all legs one label, degree <= 2) to the strand, reduced.
  Vec chi(const Character& x) const;

  /// Juxtaposition product (stacking b after a), reduced. Total degree <= 2.
  Vec juxtapose(const Vec& a, const Vec& b) const;

  /// Random-access to the raw STU relation rows (for well-definedness tests).
  const std::vector<Vec>& relations() const { return relations_; }

  std::string str(const Vec& v) const;

 private:
  StrandSpace();

  std::vector<Character> basis_;       // canonical representatives
  std::vector<int> basis_degree_;
  std::vector<int> basis_legs_;
  std::map<std::string, int> index_;   // canonical key -> basis index
  std::vector<Vec> relations_;         // raw STU rows
  std::vector<Vec> rref_;              // reduced rows, one pivot each
  std::map<int, int> pivot_row_;       // pivot column -> row
};

}  // namespace cwl
