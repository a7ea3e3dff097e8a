#include "cwl/surgery.hpp"

#include <algorithm>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "cwl/errors.hpp"

namespace cwl {

using nlohmann::json;

long SurgeryPresentation::mu3_at(int i, int j, int k) const {
  auto it = mu3.find({i, j, k});
  return it == mu3.end() ? 0 : it->second;
}

long SurgeryPresentation::mu22_at(int i, int j) const {
  auto it = mu22.find({i, j});
  return it == mu22.end() ? 0 : it->second;
}

namespace {

long int_field(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<long>();
}

void check_index(long v, int components, const std::string& where) {
  if (v < 1 || v > components)
    throw ParseError(where + ": index " + std::to_string(v) + " out of range");
}

}  // namespace

SurgeryPresentation parse_presentation(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "components" && key != "framings" && key != "mu3" && key != "mu22" &&
        key != "a1")
      throw ParseError("unknown field '" + key + "'");
  }

  SurgeryPresentation s;
  if (!doc.contains("components")) throw ParseError("missing field 'components'");
  long comps = int_field(doc["components"], "components");
  if (comps < 1) throw ParseError("components: must be >= 1");
  s.components = static_cast<int>(comps);

  if (!doc.contains("framings")) throw ParseError("missing field 'framings'");
  const json& fr = doc["framings"];
  if (!fr.is_array() || static_cast<long>(fr.size()) != comps)
    throw ParseError("framings: expected an array of length components");
  for (size_t i = 0; i < fr.size(); ++i)
    s.framings.push_back(int_field(fr[i], "framings[" + std::to_string(i) + "]"));

  if (doc.contains("mu3")) {
    const json& m = doc["mu3"];
    if (!m.is_array()) throw ParseError("mu3: expected an array");
    for (size_t idx = 0; idx < m.size(); ++idx) {
      const std::string where = "mu3[" + std::to_string(idx) + "]";
      const json& e = m[idx];
      if (!e.is_object()) throw ParseError(where + ": expected an object");
      for (const auto& [key, value] : e.items())
        if (key != "i" && key != "j" && key != "k" && key != "value")
          throw ParseError(where + ": unknown field '" + key + "'");
      for (const char* f : {"i", "j", "k", "value"})
        if (!e.contains(f)) throw ParseError(where + ": missing field '" + std::string(f) + "'");
      long i = int_field(e["i"], where + ".i");
      long j = int_field(e["j"], where + ".j");
      long k = int_field(e["k"], where + ".k");
      long v = int_field(e["value"], where + ".value");
      check_index(i, s.components, where + ".i");
      check_index(j, s.components, where + ".j");
      check_index(k, s.components, where + ".k");
      if (!(i < j && j < k)) throw ParseError(where + ": indices must satisfy i<j<k");
      std::array<int, 3> key{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
      if (s.mu3.count(key)) throw ParseError(where + ": duplicate key");
      s.mu3[key] = v;
    }
  }

  if (doc.contains("mu22")) {
    const json& m = doc["mu22"];
    if (!m.is_array()) throw ParseError("mu22: expected an array");
    for (size_t idx = 0; idx < m.size(); ++idx) {
      const std::string where = "mu22[" + std::to_string(idx) + "]";
      const json& e = m[idx];
      if (!e.is_object()) throw ParseError(where + ": expected an object");
      for (const auto& [key, value] : e.items())
        if (key != "i" && key != "j" && key != "value")
          throw ParseError(where + ": unknown field '" + key + "'");
      for (const char* f : {"i", "j", "value"})
        if (!e.contains(f)) throw ParseError(where + ": missing field '" + std::string(f) + "'");
      long i = int_field(e["i"], where + ".i");
      long j = int_field(e["j"], where + ".j");
      long v = int_field(e["value"], where + ".value");
      check_index(i, s.components, where + ".i");
      check_index(j, s.components, where + ".j");
      if (!(i < j)) throw ParseError(where + ": indices must satisfy i<j");
      std::array<int, 2> key{static_cast<int>(i), static_cast<int>(j)};
      if (s.mu22.count(key)) throw ParseError(where + ": duplicate key");
      s.mu22[key] = v;
    }
  }

  s.a1.assign(static_cast<size_t>(s.components), Rational(0));
  if (doc.contains("a1")) {
    const json& a = doc["a1"];
    if (!a.is_array() || static_cast<long>(a.size()) != comps)
      throw ParseError("a1: expected an array of length components");
    for (size_t i = 0; i < a.size(); ++i) {
      const std::string where = "a1[" + std::to_string(i) + "]";
      if (a[i].is_number_integer()) {
        s.a1[i] = Rational(a[i].get<long>());
      } else if (a[i].is_string()) {
        try {
          s.a1[i] = Rational::from_string(a[i].get<std::string>());
        } catch (const ParseError& e) {
          throw ParseError(where + ": " + e.what());
        }
      } else {
        throw ParseError(where + ": expected an integer or a 'p/q' string");
      }
    }
  }
  return s;
}

void check_presentation(const SurgeryPresentation& s) {
  if (s.components < 1) throw PreconditionError("presentation: components must be >= 1");
  if (static_cast<int>(s.framings.size()) != s.components)
    throw PreconditionError("presentation: framings length mismatch");
  if (static_cast<int>(s.a1.size()) != s.components)
    throw PreconditionError("presentation: a1 length mismatch");
  for (const auto& [key, v] : s.mu3)
    if (key[0] < 1 || key[2] > s.components || !(key[0] < key[1] && key[1] < key[2]))
      throw PreconditionError("presentation: bad mu3 key");
  for (const auto& [key, v] : s.mu22)
    if (key[0] < 1 || key[1] > s.components || !(key[0] < key[1]))
      throw PreconditionError("presentation: bad mu22 key");
}

DerivedStats derived_stats(const SurgeryPresentation& s) {
  check_presentation(s);
  DerivedStats st;
  long prod = 1;
  for (long f : s.framings) {
    if (f == 0)
      ++st.b1;
    else if (f > 0)
      ++st.sigma_plus;
    else
      ++st.sigma_minus;
    if (f != 0) prod *= f;
  }
  st.torsion_order = std::labs(prod);
  st.h1_order = st.b1 > 0 ? 0 : st.torsion_order;
  return st;
}

SurgeryPresentation relabeled(const SurgeryPresentation& s, const std::vector<int>& new_label_of) {
  if (static_cast<int>(new_label_of.size()) != s.components)
    throw PreconditionError("relabeled: permutation length mismatch");
  SurgeryPresentation out;
  out.components = s.components;
  out.framings.assign(static_cast<size_t>(s.components), 0);
  out.a1.assign(static_cast<size_t>(s.components), Rational(0));
  for (int i = 1; i <= s.components; ++i) {
    out.framings[static_cast<size_t>(new_label_of[static_cast<size_t>(i - 1)] - 1)] = s.framing(i);
    out.a1[static_cast<size_t>(new_label_of[static_cast<size_t>(i - 1)] - 1)] = s.a1_of(i);
  }
  for (const auto& [key, v] : s.mu3) {
    std::array<int, 3> nk{new_label_of[static_cast<size_t>(key[0] - 1)],
                          new_label_of[static_cast<size_t>(key[1] - 1)],
                          new_label_of[static_cast<size_t>(key[2] - 1)]};
    std::sort(nk.begin(), nk.end());
    out.mu3[nk] = v;
  }
  for (const auto& [key, v] : s.mu22) {
    std::array<int, 2> nk{new_label_of[static_cast<size_t>(key[0] - 1)],
                          new_label_of[static_cast<size_t>(key[1] - 1)]};
    std::sort(nk.begin(), nk.end());
    out.mu22[nk] = v;
  }
  return out;
}

std::pair<SurgeryPresentation, std::vector<int>> normalize_b2(const SurgeryPresentation& s) {
  if (derived_stats(s).b1 != 2)
    throw PreconditionError("normalize_b2: presentation must have exactly two zero framings");
  std::vector<int> perm(static_cast<size_t>(s.components), 0);
  int next_zero = 1, next_other = 3;
  for (int i = 1; i <= s.components; ++i)
    perm[static_cast<size_t>(i - 1)] = s.framing(i) == 0 ? next_zero++ : next_other++;
  return {relabeled(s, perm), perm};
}

SurgeryPresentation disjoint_presentation(const SurgeryPresentation& a,
                                          const SurgeryPresentation& b) {
  SurgeryPresentation out = a;
  out.components = a.components + b.components;
  out.framings.insert(out.framings.end(), b.framings.begin(), b.framings.end());
  out.a1.insert(out.a1.end(), b.a1.begin(), b.a1.end());
  for (const auto& [key, v] : b.mu3)
    out.mu3[{key[0] + a.components, key[1] + a.components, key[2] + a.components}] = v;
  for (const auto& [key, v] : b.mu22)
    out.mu22[{key[0] + a.components, key[1] + a.components}] = v;
  return out;
}

}  // namespace cwl
