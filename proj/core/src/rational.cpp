#include "cwl/rational.hpp"

#include <cctype>
#include <ostream>

#include "cwl/errors.hpp"

namespace cwl {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  // strict "p" or "p/q" with optional leading '-' on p
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) throw ParseError("bad rational literal: " + std::string(text));
  }
  std::string_view mag = num;
  if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
  if (!digits(mag)) throw ParseError("bad rational literal: " + std::string(text));

  Rational r;
  r.v_ = mpq_class(std::string(text), 10);
  if (r.v_.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  r.v_.canonicalize();
  return r;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r = -r;
  return r;
}

std::string Rational::str() const { return v_.get_str(); }
std::string Rational::numerator_str() const { return v_.get_num().get_str(); }
std::string Rational::denominator_str() const { return v_.get_den().get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow_int(const Rational& base, int exp) {
  if (exp < 0) {
    if (base.is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow_int(base, -exp);
  }
  Rational acc = 1, b = base;
  while (exp > 0) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Rational acc = 1;
  for (int i = 2; i <= n; ++i) acc *= Rational(i);
  return acc;
}

Rational double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial below -1");
  Rational acc = 1;
  for (int i = n; i > 1; i -= 2) acc *= Rational(i);
  return acc;
}

}  // namespace cwl
