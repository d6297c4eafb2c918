// Copyright 2026 The Cofree Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cofree/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cofree/couniversal.hpp"
#include "cofree/error.hpp"
#include "cofree/generating_tree.hpp"
#include "cofree/grading_tree.hpp"
#include "cofree/normality.hpp"
#include "cofree/precoalgebra.hpp"
#include "cofree/rep_hom.hpp"

namespace cofree::cli {

namespace {

using json = nlohmann::ordered_json;

struct CommandConfig {
  std::string input;
  std::string ring;
  std::size_t max_leaves = 4;
  std::size_t max_depth = 3;
  long long degree = 5;
  std::size_t basis = 1;
  std::string format = "text";
  std::string tree;
};

struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Ring> ring_override(const CommandConfig& c) {
  if (c.ring.empty()) return std::nullopt;
  return Ring::parse(c.ring);
}

// A tree fixture has a `tree` directive; anything else is read as a
// precoalgebra file.
bool is_tree_fixture(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    if (line.compare(b, 4, "tree") == 0) return true;
  }
  return false;
}

PrecoalgebraFixture load_precoalgebra(const CommandConfig& c) {
  std::string text = read_file(c.input);
  if (is_tree_fixture(text)) throw InputError(c.input + " is a generating-tree fixture");
  return parsePrecoalgebra(text, ring_override(c));
}

GeneratingTree load_generator(const CommandConfig& c) {
  std::string text = read_file(c.input);
  if (is_tree_fixture(text)) return parseTreeFixture(text, ring_override(c)).tree;
  PrecoalgebraFixture p = parsePrecoalgebra(text, ring_override(c));
  if (c.basis < 1 || c.basis > p.coalgebra.rank()) {
    throw InputError("--basis " + std::to_string(c.basis) + " outside 1.." +
                     std::to_string(p.coalgebra.rank()));
  }
  return fromPrecoalgebra(p.coalgebra, p.phi,
                          ModuleElement::basis(p.coalgebra.space(), c.basis - 1));
}

void emit(std::ostream& out, const CommandConfig& c, const std::string& text, const json& j) {
  if (c.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_eval(const CommandConfig& c, std::ostream& out) {
  GradingTree t = parseTree(c.tree);
  GeneratingTree sigma = load_generator(c);
  TensorElement value = evaluate(RepHom(sigma), t);
  json j;
  j["tree"] = t.text();
  j["value"] = value.to_string();
  emit(out, c, "tree: " + t.text() + "\nvalue: " + value.to_string() + "\n", j);
  return kExitPass;
}

int cmd_normal_check(const CommandConfig& c, std::ostream& out) {
  GeneratingTree sigma = load_generator(c);
  std::vector<NormalityReport> reports;
  // Stops at the first failing check.
  reports.push_back(isNormalUpTo(sigma, c.max_leaves, c.max_depth));
  if (reports.back().passed) reports.push_back(checkCoassociativityUpTo(sigma, c.max_leaves));
  if (reports.back().passed) reports.push_back(checkCounitalityUpTo(sigma, c.max_leaves));
  bool passed = reports.back().passed;
  std::string text;
  json j;
  j["reports"] = json::array();
  for (const auto& r : reports) {
    text += formatReport(r) + "\n";
    j["reports"].push_back(reportJson(r));
  }
  text += std::string("overall: ") + (passed ? "pass" : "fail") + "\n";
  j["overall"] = passed ? "pass" : "fail";
  emit(out, c, text, j);
  return passed ? kExitPass : kExitFailure;
}

int cmd_couniversal_verify(const CommandConfig& c, std::ostream& out) {
  PrecoalgebraFixture p = load_precoalgebra(c);
  VerificationReport admissibility = checkAdmissible(p.coalgebra);
  VerificationReport cofree;
  for (VerificationReport part : {verifyFactorization(p.coalgebra, p.phi, c.max_leaves),
                                  verifyMorphism(p.coalgebra, p.phi, c.max_leaves),
                                  verifyUniquenessRecursion(p.coalgebra, p.phi, c.max_leaves)}) {
    cofree.checks.insert(cofree.checks.end(), part.checks.begin(), part.checks.end());
  }
  bool passed = cofree.passed();
  std::string admissible = admissibility.passed() ? "yes" : "no";
  std::string text = formatVerification(admissibility) + "admissible: " + admissible + "\n" +
                     formatVerification(cofree) + "verdict: " + (passed ? "pass" : "fail") + "\n";
  json j;
  j["admissibility"] = verificationJson(admissibility);
  j["admissible"] = admissibility.passed();
  j["cofreeness"] = verificationJson(cofree);
  j["verdict"] = passed ? "pass" : "fail";
  emit(out, c, text, j);
  return passed ? kExitPass : kExitFailure;
}

int cmd_bl_family(const CommandConfig& c, std::ostream& out) {
  if (c.degree < 0) throw InputError("--degree must be nonnegative");
  GeneratingTree sigma = load_generator(c);
  // Weak normality on the trees the family touches.
  NormalityReport pre =
      isWeaklyNormalUpTo(sigma, static_cast<std::size_t>(std::max<long long>(c.degree, 1)));
  if (!pre.passed) {
    json j;
    j["precheck"] = reportJson(pre);
    emit(out, c, formatReport(pre), j);
    return kExitFailure;
  }
  std::string text;
  json j;
  j["family"] = json::array();
  std::vector<TensorElement> family = blFamily(sigma, c.degree);
  for (std::size_t n = 0; n < family.size(); ++n) {
    text += "degree " + std::to_string(n) + ": " + family[n].to_string() + "\n";
    j["family"].push_back({{"degree", n}, {"value", family[n].to_string()}});
  }
  emit(out, c, text, j);
  return kExitPass;
}

void add_common(CLI::App* sub, CommandConfig& c) {
  sub->add_option("input", c.input, "fixture file (generating tree or precoalgebra)")->required();
  sub->add_option("--ring", c.ring, "override the fixture's ring: Z, \"Zmod n\" or Q");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--basis", c.basis, "basis element b_k of a precoalgebra fixture")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig config;
  CLI::App app{"Evaluate and verify representative homomorphisms over generating trees"};
  app.name("cofree");
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "evaluate f(t) for a grading tree t");
  add_common(eval, config);
  eval->add_option("--tree", config.tree, "grading tree, e.g. \"((* *) *)\"")->required();

  CLI::App* normal = app.add_subcommand("normal-check", "bounded normality and admissibility");
  add_common(normal, config);
  normal->add_option("--max-leaves", config.max_leaves, "leaf bound")->check(CLI::PositiveNumber);
  normal->add_option("--max-depth", config.max_depth, "position depth bound");

  CLI::App* verify =
      app.add_subcommand("couniversal-verify", "verify the couniversal morphism of a precoalgebra");
  add_common(verify, config);
  verify->add_option("--max-leaves", config.max_leaves, "leaf bound")->check(CLI::PositiveNumber);

  CLI::App* bl = app.add_subcommand("bl-family", "print the degree family sigma[0..N]");
  add_common(bl, config);
  bl->add_option("--degree", config.degree, "largest degree N");

  std::vector<const char*> argv{"cofree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (eval->parsed()) return cmd_eval(config, out);
    if (normal->parsed()) return cmd_normal_check(config, out);
    if (verify->parsed()) return cmd_couniversal_verify(config, out);
    return cmd_bl_family(config, out);
  } catch (const TruncationExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const BoundTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace cofree::cli
