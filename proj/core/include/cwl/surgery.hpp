#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cwl/rational.hpp"

namespace cwl {

/// Surgery data of an algebraically split framed link: framings mu_ii,
/// triple and quadruple Milnor invariants on sorted index keys, and the
/// Alexander coefficients a1^(i) = Delta''(1)/2 of the individual components.
/// All pairwise linking numbers are implicitly zero. Indices are 1-based.
///
/// mu_ijk is stored on sorted keys and every consumer uses it either squared
/// or at fixed labels, so its antisymmetry convention never enters; mu_iijj
/// is symmetric in i,j. Relabelings transport values unchanged.
struct SurgeryPresentation {
  int components = 0;
  std::vector<long> framings;              // framings[i-1] = mu_ii
  std::map<std::array<int, 3>, long> mu3;  // key i<j<k
  std::map<std::array<int, 2>, long> mu22; // key i<j
  std::vector<Rational> a1;                // one per component, default 0

  long framing(int i) const { return framings[static_cast<size_t>(i - 1)]; }
  const Rational& a1_of(int i) const { return a1[static_cast<size_t>(i - 1)]; }
  long mu3_at(int i, int j, int k) const;
  long mu22_at(int i, int j) const;
};

struct DerivedStats {
  int b1 = 0;          // number of zero framings = first Betti number
  int sigma_plus = 0;  // positive framings
  int sigma_minus = 0; // negative framings
  long h1_order = 0;   // |prod mu_ii| when all nonzero, else 0
  long torsion_order = 1;  // |prod over nonzero framings|
};

/// Parses and fully validates the JSON input document. Unknown fields are
/// rejected; error messages name the offending field.
SurgeryPresentation parse_presentation(const std::string& json_text);

/// Well-formedness of a hand-built presentation (array lengths, key ranges,
/// sorted keys). Parsed presentations always satisfy this.
void check_presentation(const SurgeryPresentation& s);

DerivedStats derived_stats(const SurgeryPresentation& s);

/// Relabels a b1 = 2 presentation so the zero-framed components are 1 and 2
/// (order preserved within the zero and nonzero groups). Returns the new
/// presentation and the permutation new_label_of[i-1] = new label of old i.
std::pair<SurgeryPresentation, std::vector<int>> normalize_b2(const SurgeryPresentation& s);

/// Transports all Milnor data through a relabeling (used by tests).
SurgeryPresentation relabeled(const SurgeryPresentation& s, const std::vector<int>& new_label_of);

/// Disjoint union of link data on disjoint label sets (models connected sum).
SurgeryPresentation disjoint_presentation(const SurgeryPresentation& a,
                                          const SurgeryPresentation& b);

}  // namespace cwl
