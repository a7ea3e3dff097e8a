#pragma once

#include "cwl/char_combo.hpp"
#include "cwl/rational.hpp"
#include "cwl/surgery.hpp"

namespace cwl {

/// Degree <= 1 part of iota_1 applied to the normalized expansion of the
/// unknot with framing sign (+1 or -1): computed through the engine from raw
/// surgery data and required to equal -sign + Theta/16.
CharCombo u_constant(int sign);

/// Closed form for the Theta coefficient of iota_1:
///   c(L) = - sum_i b^(i) prod_{j != i} mu_jj
///          + sum_{i<j} (mu_iijj / 2) prod_{k != i,j} mu_kk
///          + sum_{i<j<k} (mu_ijk^2 / 2) prod_{t not in {i,j,k}} mu_tt.
Rational c_of_l(const SurgeryPresentation& s);

/// Runs the diagram path (log_character -> exp_truncated -> iota_n at n = 1)
/// and asserts it equals (-1)^l (prod mu_ii + c(L) Theta) in degrees <= 1.
/// Throws CalibrationError on mismatch; returns the computed combination.
CharCombo iota1_check(const SurgeryPresentation& s);

struct Degree1Value {
  Rational theta_coefficient;
};

/// Degree-1 LMO invariant: divides iota1_check(s) by the U+/U- constants as
/// a truncated degree <= 1 series and extracts the Theta coefficient.
Degree1Value z1(const SurgeryPresentation& s);

struct HnElement {
  CharCombo combo;
  Rational theta_projection;
};

/// H_n = iota_n(H_12^n) / (2^n n!) for 1 <= n <= 4; the Theta^n projection is
/// computed and asserted nonzero.
HnElement h_n(int n);

/// Degree-n LMO invariant for b1 = 2 presentations (n <= 3): lambda^n * H_n.
/// For n <= 2 the direct diagram path is recomputed and exact agreement is
/// asserted (CalibrationError otherwise).
CharCombo zn_b2(const SurgeryPresentation& s, int n);

/// The direct path on normalized input: log_character (n-mode) ->
/// exp_truncated (budget 2n/2n) -> iota_n -> degree-n part times
/// (-1)^{n sigma_+}. Asserts that nothing of degree < n survives.
CharCombo zn_b2_direct(const SurgeryPresentation& normalized, int n);

}  // namespace cwl
