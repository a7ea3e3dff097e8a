// cwl: invariants of surgery presentations of 3-manifolds.
//
// Subcommands:
//   invariants <file> [--json]          print the invariant report
//   zn <file> --degree <n>              degree-n LMO part for b1 = 2 inputs
//   verify --suite <name> [options]     run the verification suites
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cwl/char_combo.hpp"
#include "cwl/errors.hpp"
#include "cwl/lescop.hpp"
#include "cwl/lmo.hpp"
#include "cwl/pairing.hpp"
#include "cwl/report.hpp"
#include "cwl/surgery.hpp"
#include "cwl/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPreconditionError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cwl::ParseError("cannot read input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_invariants(const std::string& path, bool as_json) {
  const cwl::SurgeryPresentation s = cwl::parse_presentation(read_file(path));
  const cwl::InvariantReport report = cwl::compute_report(s);
  std::cout << (as_json ? cwl::render_json(report) : cwl::render_text(report));
  return kExitOk;
}

int run_zn(const std::string& path, int degree) {
  const cwl::SurgeryPresentation s = cwl::parse_presentation(read_file(path));
  if (cwl::derived_stats(s).b1 != 2)
    throw cwl::PreconditionError("zn requires a presentation with first Betti number 2");
  const cwl::CharCombo combo = cwl::zn_b2(s, degree);
  std::cout << "degree " << degree << " part (lambda^" << degree << " * H_" << degree << "):\n";
  std::cout << combo.str();
  std::cout << "theta^" << degree
            << " projection = " << cwl::theta_power_coefficient(combo, degree) << '\n';
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed, int trials, int max_n) {
  std::vector<cwl::CheckResult> results;
  if (suite == "all")
    results = cwl::verify_all(seed, trials, max_n);
  else if (suite == "lemma2")
    results = cwl::verify_lemma2(max_n);
  else if (suite == "eq3")
    results = cwl::verify_eq3();
  else if (suite == "theorem2")
    results = cwl::verify_theorem2(seed, trials);
  else if (suite == "lemma1")
    results = cwl::verify_lemma1(seed, trials);
  else if (suite == "strand")
    results = cwl::verify_strand();
  else if (suite == "hn")
    results = cwl::verify_hn(seed, trials, max_n);
  else
    throw cwl::PreconditionError("unknown suite: " + suite);

  bool all_ok = true;
  for (const auto& r : results) {
    const char* tag = r.gating ? (r.passed ? "PASS" : "FAIL") : "REPORT";
    std::cout << tag << ' ' << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << '\n';
    if (r.gating && !r.passed) all_ok = false;
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Casson-Walker-Lescop / LMO invariant calculator"};
  app.require_subcommand(1);

  std::string invariants_path;
  bool invariants_json = false;
  auto* invariants = app.add_subcommand("invariants", "compute invariants of a presentation");
  invariants->add_option("file", invariants_path, "surgery presentation (JSON)")->required();
  invariants->add_flag("--json", invariants_json, "machine-readable output");

  std::string zn_path;
  int zn_degree = 1;
  auto* zn = app.add_subcommand("zn", "degree-n LMO part for b1 = 2 presentations");
  zn->add_option("file", zn_path, "surgery presentation (JSON)")->required();
  zn->add_option("--degree", zn_degree, "degree n (1..3)")->required();

  std::string suite = "all";
  std::uint64_t seed = cwl::kDefaultSeed;
  int trials = 200;
  int max_n = 4;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "all|lemma2|eq3|theorem2|lemma1|strand|hn");
  verify->add_option("--seed", seed, "64-bit seed for the randomized suites");
  verify->add_option("--trials", trials, "randomized trial count");
  verify->add_option("--max-n", max_n, "largest truncation degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (invariants->parsed()) return run_invariants(invariants_path, invariants_json);
    if (zn->parsed()) return run_zn(zn_path, zn_degree);
    return run_verify(suite, seed, trials, max_n);
  } catch (const cwl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const cwl::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return kExitPreconditionError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
}
