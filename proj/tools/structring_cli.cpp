// Command-line front end for the structring library.
//
//   structring preorder validate|close|compose --in <file> [--in2 <file>] [--out <file>]
//   structring matrix det|adj|preadj|charpoly|inv --in <file> [--method ...] [--poly <file>]
//   structring check structural --matrix <file> --theta <file>
//   structring demo jacobson
//   structring proptest --suite <name> --ring <json> --n <int> --trials <int> --seed <int>
//
// Results are JSON on stdout. Exit status: 0 success, 1 negative answer
// (invalid preorder, non-structural matrix, failed suite), 2 error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "structring/structring.hpp"

namespace {

using structring::io::json;
namespace sr = structring;

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    sr::io::write_json_file(out_path, doc);
  }
}

int run_preorder(const std::string& action, const std::string& in, const std::string& in2, const std::string& out,
                 bool close_theta) {
  const json doc = sr::io::read_json_file(in);
  if (action == "validate") {
    const bool valid = sr::validate(sr::io::relation_from_json(doc));
    emit({{"valid", valid}}, out);
    return valid ? 0 : 1;
  }
  if (action == "close") {
    emit(sr::io::to_json(sr::closure(sr::io::relation_from_json(doc))), out);
    return 0;
  }
  if (in2.empty()) throw sr::Error(sr::ErrorCode::invalid_argument, "compose needs --in2");
  const auto outer = sr::io::preorder_from_json(doc, close_theta);
  const auto inner = sr::io::preorder_from_json(sr::io::read_json_file(in2), close_theta);
  emit(sr::io::to_json(sr::compose_kron(outer, inner)), out);
  return 0;
}

int run_matrix(const std::string& action, const std::string& in, const std::string& method,
               const std::string& poly_path, const std::string& out, bool close_theta) {
  const sr::StructMatrix a = sr::io::matrix_from_json(sr::io::read_json_file(in), close_theta);
  if (action == "det") {
    const sr::Element d = sr::determinant(a);
    emit({{"ring", sr::io::to_json(a.ring())}, {"determinant", sr::io::to_json(d)}}, out);
    return 0;
  }
  if (action == "adj") {
    emit(sr::io::to_json(sr::adjoint_classical(a)), out);
    return 0;
  }
  if (action == "preadj") {
    emit(sr::io::to_json(sr::preadjoint(a)), out);
    return 0;
  }
  if (action == "charpoly") {
    emit(sr::io::to_json(sr::char_poly(a)), out);
    return 0;
  }
  const auto& theta = a.pattern();
  std::optional<sr::InverseCertificate<sr::StructMatrix>> cert;
  if (method.empty()) {
    cert = sr::invert(a, theta);
  } else if (method == "adjugate") {
    cert = sr::inv_adjugate(a, theta);
  } else if (method == "charpoly") {
    cert = sr::inv_char_poly(a, theta);
  } else if (method == "annihilator") {
    if (poly_path.empty()) throw sr::Error(sr::ErrorCode::invalid_argument, "--method annihilator needs --poly");
    cert = sr::inverse_from_monic_annihilator(a, sr::io::polynomial_from_json(sr::io::read_json_file(poly_path)));
  } else if (method == "power") {
    cert = sr::inv_by_power_order(a);
  } else if (method == "nilgeom") {
    cert = sr::inv_nil_geometric(a, theta);
  } else {
    throw sr::Error(sr::ErrorCode::invalid_argument, "unknown method '" + method + "'");
  }
  if (theta && !cert->structural && sr::check_structural(a, *theta)) {
    cert->structural = sr::check_structural(cert->inverse, *theta);
  }
  emit(sr::io::to_json(*cert), out);
  return 0;
}

int run_check(const std::string& matrix_path, const std::string& theta_path, bool close_theta) {
  const sr::StructMatrix a = sr::io::matrix_from_json(sr::io::read_json_file(matrix_path), close_theta);
  const sr::Preorder theta = sr::io::preorder_from_json(sr::io::read_json_file(theta_path), close_theta);
  const bool ok = sr::check_structural(a, theta);
  std::cout << json{{"structural", ok}}.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrices over rings with structural (preorder) patterns"};
  app.require_subcommand(1);
  bool close_theta = false;
  app.add_flag("--close-theta", close_theta, "Replace non-preorder inputs by their reflexive-transitive closure");

  std::string in, in2, out, method, poly, matrix_path, theta_path;

  auto* preorder_cmd = app.add_subcommand("preorder", "Validate, close or compose relations");
  std::string preorder_action;
  preorder_cmd->add_option("action", preorder_action, "validate | close | compose")
      ->required()
      ->check(CLI::IsMember({"validate", "close", "compose"}));
  preorder_cmd->add_option("--in", in, "Relation JSON")->required();
  preorder_cmd->add_option("--in2", in2, "Second (inner) preorder for compose");
  preorder_cmd->add_option("--out", out, "Output file (default: stdout)");
  preorder_cmd->add_flag("--close-theta", close_theta);

  auto* matrix_cmd = app.add_subcommand("matrix", "Matrix operations");
  std::string matrix_action;
  matrix_cmd->add_option("action", matrix_action, "det | adj | preadj | charpoly | inv")
      ->required()
      ->check(CLI::IsMember({"det", "adj", "preadj", "charpoly", "inv"}));
  matrix_cmd->add_option("--in", in, "Matrix JSON")->required();
  matrix_cmd->add_option("--method", method, "Inversion method")
      ->check(CLI::IsMember({"adjugate", "charpoly", "annihilator", "power", "nilgeom"}));
  matrix_cmd->add_option("--poly", poly, "Annihilating polynomial JSON for --method annihilator");
  matrix_cmd->add_option("--out", out, "Output file (default: stdout)");
  matrix_cmd->add_flag("--close-theta", close_theta);

  auto* check_cmd = app.add_subcommand("check", "Structural membership test (exit 0 yes, 1 no)");
  std::string check_action;
  check_cmd->add_option("action", check_action, "structural")->required()->check(CLI::IsMember({"structural"}));
  check_cmd->add_option("--matrix", matrix_path, "Matrix JSON")->required();
  check_cmd->add_option("--theta", theta_path, "Preorder JSON")->required();
  check_cmd->add_flag("--close-theta", close_theta);

  auto* demo_cmd = app.add_subcommand("demo", "Built-in demonstrations");
  std::string demo_name;
  demo_cmd->add_option("name", demo_name, "jacobson")->required()->check(CLI::IsMember({"jacobson"}));

  auto* prop_cmd = app.add_subcommand("proptest", "Seeded property-test suites");
  std::string suite, ring_text;
  std::size_t n = 2;
  std::uint64_t trials = 100, seed = 0, trial_offset = 0;
  double density = sr::harness::kDefaultDensity;
  unsigned retry_cap = sr::harness::kDefaultRetryCap;
  bool exhaustive = false;
  prop_cmd->add_option("--suite", suite, "closure | preadjoint | adjoint | flatten | cayley_hamilton | nil_lift | dedekind")
      ->required();
  prop_cmd->add_option("--ring", ring_text, "Ring descriptor JSON")->required();
  prop_cmd->add_option("--n", n, "Matrix size")->required();
  prop_cmd->add_option("--trials", trials, "Number of trials");
  prop_cmd->add_option("--seed", seed, "64-bit seed");
  prop_cmd->add_option("--density", density, "Off-diagonal density of random preorders")->check(CLI::Range(0.0, 1.0));
  prop_cmd->add_option("--theta", theta_path, "Fixed preorder JSON instead of random ones");
  prop_cmd->add_option("--retry-cap", retry_cap, "Rejection-sampling attempts per matrix");
  prop_cmd->add_option("--trial-offset", trial_offset, "Index of the first trial (for replay)");
  prop_cmd->add_flag("--exhaustive", exhaustive, "closure suite only: enumerate every instance over Z/m");
  prop_cmd->add_flag("--close-theta", close_theta);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*preorder_cmd) return run_preorder(preorder_action, in, in2, out, close_theta);
    if (*matrix_cmd) return run_matrix(matrix_action, in, method, poly, out, close_theta);
    if (*check_cmd) return run_check(matrix_path, theta_path, close_theta);
    if (*demo_cmd) {
      const auto report = sr::harness::demo_jacobson();
      json doc = sr::harness::to_json(report);
      doc["instance"] = sr::harness::demo_jacobson_instance();
      std::cout << doc.dump(2) << "\n";
      return report.passed() ? 0 : 1;
    }
    const sr::Ring ring = sr::io::ring_from_text(ring_text);
    const auto suite_name = sr::harness::parse_suite_name(suite);
    sr::harness::SuiteReport report;
    if (exhaustive) {
      if (suite_name != sr::harness::SuiteName::closure) {
        throw sr::Error(sr::ErrorCode::unsupported_combination, "--exhaustive applies to the closure suite only");
      }
      report = sr::harness::run_exhaustive_closure(ring, n);
    } else {
      sr::harness::Scenario scenario{ring};
      scenario.n = n;
      scenario.trials = trials;
      scenario.seed = seed;
      scenario.density = density;
      scenario.retry_cap = retry_cap;
      scenario.trial_offset = trial_offset;
      if (!theta_path.empty()) {
        scenario.theta = sr::io::preorder_from_json(sr::io::read_json_file(theta_path), close_theta);
      }
      report = sr::harness::run_suite(suite_name, scenario);
    }
    std::cout << sr::harness::to_json(report).dump(2) << "\n";
    return report.passed() ? 0 : 1;
  } catch (const sr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
