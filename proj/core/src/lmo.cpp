#include "cwl/lmo.hpp"

#include "cwl/char_algebra.hpp"
#include "cwl/errors.hpp"
#include "cwl/lescop.hpp"
#include "cwl/pairing.hpp"

namespace cwl {

namespace {

// coefficient of Theta measured against the stored generator
Rational theta_coefficient(const CharCombo& x) { return theta_power_coefficient(x, 1); }

CharCombo iota1_engine(const SurgeryPresentation& s) {
  const PairingContext ctx(1);
  const CharCombo lg = log_character(s, 1);
  const CharCombo e = exp_truncated(lg, LegBudget::for_degree(1, s.components));
  return iota_n(e, s.components, ctx);
}

}  // namespace

CharCombo u_constant(int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("u_constant: sign must be +1 or -1");
  SurgeryPresentation s;
  s.components = 1;
  s.framings = {sign};
  s.a1 = {Rational(0)};
  CharCombo u = iota1_engine(s);
  CharCombo expect = CharCombo::unit().scaled(Rational(-sign));
  expect.insert(theta_graph(), Rational(1, 16));
  if (u != expect)
    throw CalibrationError("u_constant: engine disagrees with -(sign) + Theta/16");
  return u;
}

Rational c_of_l(const SurgeryPresentation& s) {
  check_presentation(s);
  const int l = s.components;
  auto product_excluding = [&](auto&& excluded) {
    Rational p = 1;
    for (int j = 1; j <= l; ++j) {
      if (excluded(j)) continue;
      p *= Rational(s.framing(j));
    }
    return p;
  };
  Rational c = 0;
  for (int i = 1; i <= l; ++i)
    c -= b_coefficient(s.framing(i), s.a1_of(i)) *
         product_excluding([&](int j) { return j == i; });
  for (const auto& [key, v] : s.mu22)
    c += Rational(v, 2) * product_excluding([&](int j) { return j == key[0] || j == key[1]; });
  for (const auto& [key, v] : s.mu3)
    c += Rational(v) * Rational(v) / Rational(2) *
         product_excluding([&](int j) { return j == key[0] || j == key[1] || j == key[2]; });
  return c;
}

CharCombo iota1_check(const SurgeryPresentation& s) {
  CharCombo engine = iota1_engine(s);

  Rational prod = 1;
  for (int i = 1; i <= s.components; ++i) prod *= Rational(s.framing(i));
  const Rational sign = s.components % 2 == 0 ? Rational(1) : Rational(-1);
  CharCombo expect = CharCombo::unit().scaled(sign * prod);
  expect.insert(theta_graph(), sign * c_of_l(s));

  if (engine != expect)
    throw CalibrationError("iota1_check: diagram path disagrees with the closed form");
  return engine;
}

Degree1Value z1(const SurgeryPresentation& s) {
  const DerivedStats st = derived_stats(s);
  const CharCombo numerator = iota1_check(s);
  const Rational n0 = numerator.coefficient(unit_key());
  const Rational n1 = theta_coefficient(numerator);

  static const CharCombo u_plus = u_constant(+1);
  static const CharCombo u_minus = u_constant(-1);
  const Rational up0 = u_plus.coefficient(unit_key());
  const Rational up1 = theta_coefficient(u_plus);
  const Rational um0 = u_minus.coefficient(unit_key());
  const Rational um1 = theta_coefficient(u_minus);

  // denominator as a truncated series d0 (1 + (d1/d0) Theta)
  const Rational d0 = pow_int(up0, st.sigma_plus) * pow_int(um0, st.sigma_minus);
  const Rational dlog =
      Rational(st.sigma_plus) * up1 / up0 + Rational(st.sigma_minus) * um1 / um0;
  return Degree1Value{(n1 - n0 * dlog) / d0};
}

HnElement h_n(int n) {
  if (n < 1 || n > 4) throw PreconditionError("h_n: enumeration budget is 1 <= n <= 4");
  Character power = hbar(1, 2);
  for (int i = 1; i < n; ++i) power = disjoint_union(power, hbar(1, 2));
  const PairingContext ctx(n);
  CharCombo combo =
      iota_n(CharCombo::single(power), 2, ctx).scaled(Rational(1) / (pow_int(2, n) * factorial(n)));
  HnElement out{combo, theta_power_coefficient(combo, n)};
  if (out.theta_projection.is_zero())
    throw CalibrationError("h_n: Theta^n projection vanished");
  return out;
}

CharCombo zn_b2_direct(const SurgeryPresentation& normalized, int n) {
  const DerivedStats st = derived_stats(normalized);
  const PairingContext ctx(n);
  const CharCombo lg = log_character(normalized, n);
  const CharCombo e = exp_truncated(lg, LegBudget::for_degree(n, normalized.components));
  const CharCombo io = iota_n(e, normalized.components, ctx);
  if (io.min_degree() >= 0 && io.min_degree() < n)
    throw CalibrationError("zn_b2_direct: numerator has terms below degree n");
  const Rational sign = (n * st.sigma_plus) % 2 == 0 ? Rational(1) : Rational(-1);
  return io.degree_part(n).scaled(sign);
}

CharCombo zn_b2(const SurgeryPresentation& s, int n) {
  if (n < 1 || n > 3) throw PreconditionError("zn_b2: degree must satisfy 1 <= n <= 3");
  auto [normalized, perm] = normalize_b2(s);
  const Rational lambda = lambda_b2(normalized);
  const CharCombo pipeline = h_n(n).combo.scaled(pow_int(lambda, n));
  if (n <= 2) {
    const CharCombo direct = zn_b2_direct(normalized, n);
    if (direct != pipeline)
      throw CalibrationError("zn_b2: direct path disagrees with lambda^n H_n");
  }
  return pipeline;
}

}  // namespace cwl
