#include "cwl/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "cwl/lescop.hpp"
#include "cwl/lmo.hpp"

namespace cwl {

InvariantReport compute_report(const SurgeryPresentation& s) {
  InvariantReport r;
  r.stats = derived_stats(s);
  if (r.stats.b1 == 2) {
    auto [normalized, perm] = normalize_b2(s);
    r.lambda_lemma1 = lambda_b2(normalized);
  }
  r.lambda_surgery = lambda_surgery(s);
  r.z1_theta = z1(s).theta_coefficient;
  return r;
}

std::string render_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "b1             = " << r.stats.b1 << '\n';
  os << "sigma_plus     = " << r.stats.sigma_plus << '\n';
  os << "sigma_minus    = " << r.stats.sigma_minus << '\n';
  os << "h1_order       = " << r.stats.h1_order << '\n';
  os << "torsion_order  = " << r.stats.torsion_order << '\n';
  if (r.lambda_lemma1) os << "lambda_lemma1  = " << *r.lambda_lemma1 << '\n';
  os << "lambda_surgery = " << r.lambda_surgery << '\n';
  os << "z1_theta       = " << r.z1_theta << '\n';
  for (const auto& zn : r.zn) {
    os << "z" << zn.degree << "_theta_power = " << zn.theta_power << '\n';
    os << "z" << zn.degree << "_combo:\n" << zn.combo;
  }
  return os.str();
}

std::string render_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["b1"] = r.stats.b1;
  j["sigma_plus"] = r.stats.sigma_plus;
  j["sigma_minus"] = r.stats.sigma_minus;
  j["h1_order"] = r.stats.h1_order;
  j["torsion_order"] = r.stats.torsion_order;
  if (r.lambda_lemma1) j["lambda_lemma1"] = r.lambda_lemma1->str();
  j["lambda_surgery"] = r.lambda_surgery.str();
  j["z1_theta"] = r.z1_theta.str();
  if (!r.zn.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& zn : r.zn) {
      nlohmann::ordered_json e;
      e["degree"] = zn.degree;
      e["theta_power"] = zn.theta_power.str();
      e["combo"] = zn.combo;
      arr.push_back(e);
    }
    j["zn"] = arr;
  }
  return j.dump(2) + "\n";
}

}  // namespace cwl
