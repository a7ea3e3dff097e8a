#pragma once

#include <map>
#include <string>

#include "cwl/character.hpp"
#include "cwl/rational.hpp"

namespace cwl {

/// Finite formal Q-linear combination of canonical Characters, graded by
/// degree. Keys are canonical serializations; AS signs are folded into the
/// coefficients on insertion and zero terms are dropped, so no two stored
/// keys are AS-signed-isomorphic. Stored characters always have circles == 0.
class CharCombo {
 public:
  struct Term {
    Character character;
    Rational coeff;
    int degree = 0;
  };

  CharCombo() = default;

  /// The empty diagram with coefficient 1 (the unit of the product).
  static CharCombo unit();
  static CharCombo single(const Character& c, const Rational& coeff = 1);

  /// Canonicalizes, multiplies by the AS sign, merges, drops zeros.
  void insert(const Character& c, const Rational& coeff);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::string, Term>& terms() const { return terms_; }
  Rational coefficient(const std::string& canonical_key) const;

  CharCombo degree_part(int degree) const;
  int min_degree() const;  ///< -1 when empty
  int max_degree() const;  ///< -1 when empty

  CharCombo& operator+=(const CharCombo& o);
  friend CharCombo operator+(CharCombo a, const CharCombo& b) { return a += b; }
  CharCombo scaled(const Rational& r) const;
  /// Bilinear extension of disjoint union.
  CharCombo product(const CharCombo& o) const;

  bool operator==(const CharCombo& o) const;
  bool operator!=(const CharCombo& o) const { return !(*this == o); }

  /// One "<coeff> *" line followed by the character block, per term,
  /// in canonical key order; "0" for the empty combination.
  std::string str() const;

 private:
  std::map<std::string, Term> terms_;
};

inline CharCombo add(const CharCombo& a, const CharCombo& b) { return a + b; }
inline CharCombo scale(const Rational& r, const CharCombo& x) { return x.scaled(r); }
inline CharCombo product(const CharCombo& a, const CharCombo& b) { return a.product(b); }

/// Canonical key of the empty diagram.
const std::string& unit_key();

}  // namespace cwl
