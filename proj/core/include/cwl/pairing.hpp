#pragma once

#include <utility>
#include <vector>

#include "cwl/char_combo.hpp"
#include "cwl/rational.hpp"

namespace cwl {

/// Truncation degree n of the contraction maps; every free circle produced
/// while joining legs is deleted and replaced by the factor -2n.
struct PairingContext {
  int n;
  Rational circle_value;

  explicit PairingContext(int degree) : n(degree), circle_value(-2L * degree) {}
};

/// All perfect matchings of the given items ((k-1)!! of them for even k).
std::vector<std::vector<std::pair<int, int>>> perfect_matchings(const std::vector<int>& items);

/// J^i_n: sums over all ways of joining the i-labeled legs of each term in
/// pairs; circles become factors of -2n and results are canonicalized.
/// Requires an even i-leg count on every term.
CharCombo join_all(const CharCombo& x, int label, const PairingContext& ctx);

/// j^i_n: like join_all, but terms whose i-leg count differs from 2n are
/// dropped.
CharCombo join_exact(const CharCombo& x, int label, const PairingContext& ctx);

/// iota_n on characters: j^1_n o ... o j^l_n. Output has no legs; a term of
/// degree n*l + i contributes in degree i.
CharCombo iota_n(const CharCombo& x, int num_labels, const PairingContext& ctx);

/// Coefficient of the disjoint union of n copies of the theta graph
/// (measured against the stored generator, so theta itself projects to +1).
Rational theta_power_coefficient(const CharCombo& x, int n);

}  // namespace cwl
