#pragma once

#include <vector>

#include "cwl/char_combo.hpp"
#include "cwl/character.hpp"
#include "cwl/rational.hpp"
#include "cwl/surgery.hpp"

namespace cwl {

/// The five named generator characters.
///   strut(i)        I_i:    two legs labeled i joined by an edge, degree 1
///   tripod(i,j,k)   W_ijk:  one internal vertex with legs i, j, k, degree 2
///   hbar(i,j)       H_ij:   two internal vertices joined by one edge, each
///                           carrying an i-leg and a j-leg, degree 3
///   wheel2(i)       phi_i:  two internal vertices joined by a double edge,
///                           each carrying an i-leg, degree 2
///   theta_graph()   Theta:  two internal vertices joined by a triple edge,
///                           degree 1, closed
///
/// The stored vertex orientations are wiring constants calibrated so that
/// join_all(W x W, i) = -H, iota_n(H, n=1) = +Theta and
/// iota_n(phi, n=1) = +Theta hold; iota1_check() cross-validates them on
/// every run against the closed degree-1 formula.
Character strut(int i);
Character tripod(int i, int j, int k);
Character hbar(int i, int j);
Character wheel2(int i);
Character theta_graph();

struct GeneratorKind {
  enum class Tag { Strut, Tripod, HBar, Wheel2, Theta };
  Tag tag = Tag::Theta;
  int i = 0, j = 0, k = 0;

  static GeneratorKind Strut(int i) { return {Tag::Strut, i, 0, 0}; }
  static GeneratorKind Tripod(int i, int j, int k) { return {Tag::Tripod, i, j, k}; }
  static GeneratorKind HBar(int i, int j) { return {Tag::HBar, i, j, 0}; }
  static GeneratorKind Wheel2(int i) { return {Tag::Wheel2, i, 0, 0}; }
  static GeneratorKind Theta() { return {Tag::Theta, 0, 0, 0}; }
};

Character generator(const GeneratorKind& kind);

/// (2 + framing^2 - 24*a1) / 48: the wheel coefficient after merging the
/// unknot corrections into the string-link expansion.
Rational b_coefficient(long framing, const Rational& a1);

/// Log of the truncated Kontsevich expansion of the presentation.
/// n == 1: sum over components of (mu_ii/2) I_i - sum mu_ijk W_ijk
///         + sum (mu_iijj/2) H_ij + sum b^(i) phi_i.
/// n >= 2 (b1 = 2 pipeline, normalized labels): only the struts with nonzero
///         framing, the tripods W_12k and H_12 survive the leg budget, so
///         only those are emitted.
CharCombo log_character(const SurgeryPresentation& s, int n);

/// Exact per-label leg requirement and internal-vertex cap for exp_truncated.
struct LegBudget {
  int per_label = 0;        // required leg count for every label (= 2n)
  int max_internal = 0;     // internal vertex cap (= 2n)
  std::vector<int> labels;  // {1..l}

  static LegBudget for_degree(int n, int num_labels);
};

/// Exponential with respect to disjoint union, truncated to the multisets of
/// terms that hit per_label exactly on every budgeted label and stay within
/// max_internal. A multiset with multiplicities m_g contributes
/// (prod c_g^{m_g} / m_g!) times the disjoint union of its members.
CharCombo exp_truncated(const CharCombo& x, const LegBudget& budget);

}  // namespace cwl
