#include "cwl/char_combo.hpp"

#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

CharCombo CharCombo::unit() { return single(Character{}); }

CharCombo CharCombo::single(const Character& c, const Rational& coeff) {
  CharCombo x;
  x.insert(c, coeff);
  return x;
}

void CharCombo::insert(const Character& c, const Rational& coeff) {
  if (c.circles() != 0)
    throw StructuralError("combos store circle-free characters; substitute circles first");
  if (coeff.is_zero()) return;
  CanonicalForm cf = canonicalize(c);
  if (cf.sign == 0) return;
  auto it = terms_.find(cf.key);
  if (it == terms_.end()) {
    terms_.emplace(cf.key, Term{cf.character, coeff * Rational(cf.sign), cf.character.degree()});
    return;
  }
  it->second.coeff += coeff * Rational(cf.sign);
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

Rational CharCombo::coefficient(const std::string& canonical_key) const {
  auto it = terms_.find(canonical_key);
  return it == terms_.end() ? Rational(0) : it->second.coeff;
}

CharCombo CharCombo::degree_part(int degree) const {
  CharCombo out;
  for (const auto& [key, term] : terms_)
    if (term.degree == degree) out.terms_.emplace(key, term);
  return out;
}

int CharCombo::min_degree() const {
  int d = -1;
  for (const auto& [key, term] : terms_)
    if (d < 0 || term.degree < d) d = term.degree;
  return d;
}

int CharCombo::max_degree() const {
  int d = -1;
  for (const auto& [key, term] : terms_)
    if (term.degree > d) d = term.degree;
  return d;
}

CharCombo& CharCombo::operator+=(const CharCombo& o) {
  for (const auto& [key, term] : o.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, term);
      continue;
    }
    it->second.coeff += term.coeff;
    if (it->second.coeff.is_zero()) terms_.erase(it);
  }
  return *this;
}

CharCombo CharCombo::scaled(const Rational& r) const {
  CharCombo out;
  if (r.is_zero()) return out;
  for (const auto& [key, term] : terms_)
    out.terms_.emplace(key, Term{term.character, term.coeff * r, term.degree});
  return out;
}

CharCombo CharCombo::product(const CharCombo& o) const {
  CharCombo out;
  for (const auto& [ka, ta] : terms_)
    for (const auto& [kb, tb] : o.terms_)
      out.insert(disjoint_union(ta.character, tb.character), ta.coeff * tb.coeff);
  return out;
}

bool CharCombo::operator==(const CharCombo& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second.coeff != jt->second.coeff) return false;
  return true;
}

std::string CharCombo::str() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [key, term] : terms_) {
    os << term.coeff << " *\n" << key;
  }
  return os.str();
}

const std::string& unit_key() {
  static const std::string key = canonicalize(Character{}).key;
  return key;
}

}  // namespace cwl
