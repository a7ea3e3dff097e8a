#include "cwl/lescop.hpp"

#include "cwl/errors.hpp"

namespace cwl {

Rational lambda_b2(const SurgeryPresentation& s) {
  DerivedStats st = derived_stats(s);
  if (st.b1 != 2) throw PreconditionError("lambda_b2: first Betti number must be 2");
  if (s.components < 2 || s.framing(1) != 0 || s.framing(2) != 0)
    throw PreconditionError("lambda_b2: labels must be normalized (mu_11 = mu_22 = 0)");
  Rational inner = Rational(s.mu22_at(1, 2));
  Rational torsion = 1;
  for (int i = 3; i <= s.components; ++i) {
    const long mu = s.framing(i);
    const long w = s.mu3_at(1, 2, i);
    inner += Rational(w) * Rational(w) / Rational(mu);
    torsion *= Rational(mu);
  }
  return torsion.abs() * inner;
}

Rational lambda_surgery(const SurgeryPresentation& s) {
  const DerivedStats st = derived_stats(s);  // validates the presentation
  const int l = s.components;
  auto framing_product_excluding = [&](auto&& excluded) {
    Rational p = 1;
    for (int j = 1; j <= l; ++j) {
      if (excluded(j)) continue;
      p *= Rational(s.framing(j));
    }
    return p;
  };

  Rational bracket = 0;
  for (int i = 1; i <= l; ++i) {
    const Rational zeta_i = s.a1_of(i) - Rational(1, 24);
    const Rational correction =
        (Rational(s.framing(i)) * Rational(s.framing(i)) + Rational(1)) / Rational(24);
    bracket += (zeta_i - correction) * framing_product_excluding([&](int j) { return j == i; });
  }
  for (const auto& [key, v] : s.mu22) {
    if (v == 0) continue;
    bracket += Rational(v) *
               framing_product_excluding([&](int j) { return j == key[0] || j == key[1]; });
  }
  for (const auto& [key, v] : s.mu3) {
    if (v == 0) continue;
    bracket += Rational(v) * Rational(v) * framing_product_excluding(
                                     [&](int j) { return j == key[0] || j == key[1] || j == key[2]; });
  }

  const Rational sign = st.sigma_minus % 2 == 0 ? Rational(1) : Rational(-1);
  return Rational(st.h1_order) * Rational(st.sigma_plus - st.sigma_minus) / Rational(8) +
         sign * bracket;
}

Rational lambda_connected_sum(const Rational& lambda, long h1_other) {
  return lambda * Rational(h1_other);
}

}  // namespace cwl
