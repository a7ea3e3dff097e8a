#pragma once

#include "cwl/rational.hpp"
#include "cwl/surgery.hpp"

namespace cwl {

/// Casson-Walker-Lescop invariant of the surgered manifold, specialized
/// closed form for b1 = 2 on normalized labels (mu_11 = mu_22 = 0):
///   lambda = |prod_{i>=3} mu_ii| * (sum_{i>=3} mu_12i^2 / mu_ii + mu_1122).
Rational lambda_b2(const SurgeryPresentation& s);

/// Lescop's global surgery formula for an algebraically split link:
///   lambda = |H_1|(sigma_+ - sigma_-)/8
///          + (-1)^{sigma_-} [ sum_i (zeta(L_i) - (mu_ii^2+1)/24) prod_{j!=i} mu_jj
///                           + sum_{|I| in {2,3}} zeta(L_I) prod_{j not in I} mu_jj ]
/// with zeta(L_i) = a1^(i) - 1/24, zeta(L_ij) = mu_iijj, zeta(L_ijk) = mu_ijk^2
/// and zeta = 0 on larger subsets.
Rational lambda_surgery(const SurgeryPresentation& s);

/// Connected sum with a manifold of first homology order h1_other:
/// lambda(M # M') = lambda(M) * |H_1(M')| (valid when |H_1(M)| = 0 or
/// lambda(M') = 0).
Rational lambda_connected_sum(const Rational& lambda, long h1_other);

}  // namespace cwl
