#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwl/rational.hpp"
#include "cwl/surgery.hpp"

namespace cwl {

/// Everything the invariants command prints. Deterministic for a given input.
struct InvariantReport {
  DerivedStats stats;
  std::optional<Rational> lambda_lemma1;  ///< only for b1 = 2 inputs
  Rational lambda_surgery;
  Rational z1_theta;

  struct ZnEntry {
    int degree = 0;
    Rational theta_power;
    std::string combo;  ///< canonical combo serialization
  };
  std::vector<ZnEntry> zn;  ///< filled by the zn command only
};

InvariantReport compute_report(const SurgeryPresentation& s);

std::string render_text(const InvariantReport& r);
std::string render_json(const InvariantReport& r);

}  // namespace cwl
