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

#include "cofree/couniversal.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cofree/error.hpp"
#include "cofree/grading_tree.hpp"

namespace cofree {

namespace {

std::string basis_name(std::size_t k) { return "b" + std::to_string(k + 1); }

CheckResult make_check(std::string name, std::optional<std::size_t> bound) {
  CheckResult c;
  c.name = std::move(name);
  c.bound = bound;
  return c;
}

void fail(CheckResult& c, std::string where, std::string left, std::string right) {
  c.passed = false;
  c.witness = CheckWitness{std::move(where), std::move(left), std::move(right)};
}

TensorElement three_factor_zero(const FinitePrecoalgebra& P) {
  return TensorElement(P.ring(), std::vector<ModuleSpace>(3, P.space()));
}

using Index = TensorElement::Index;

Index index3(std::size_t a, std::size_t b, std::size_t c) {
  return Index{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
               static_cast<std::uint32_t>(c)};
}

// φ̃(d)(t) from the two determining formulae alone.
class Recursion {
 public:
  Recursion(const FinitePrecoalgebra& P, const LinearMap& phi, const VerifyHooks& hooks)
      : P_(P), phi_(phi), hooks_(hooks), augmented_(augment(phi.codomain())) {}

  TensorElement value(const ModuleElement& d, const GradingTree& t) {
    auto key = std::make_pair(d.to_csv(), t.text());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TensorElement out(augmented_.ring, {});
    if (t.is_leaf()) {
      out = TensorElement::of(embedV(phi_(d)) + embedK(augmented_, P_.epsilon(d)));
    } else {
      out = TensorElement(augmented_.ring,
                          std::vector<ModuleSpace>(t.leaf_count(), augmented_));
      for (const auto& [l, r] : hooks_.split(P_, d)) {
        out += tensorJoin(value(l, t.left()), value(r, t.right()));
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  const FinitePrecoalgebra& P_;
  const LinearMap& phi_;
  const VerifyHooks& hooks_;
  ModuleSpace augmented_;
  std::map<std::pair<std::string, std::string>, TensorElement> memo_;
};

void require_phi(const FinitePrecoalgebra& P, const LinearMap& phi) {
  if (!(phi.domain() == P.space())) {
    throw SpaceMismatch("phi is defined on " + phi.domain().tag + ", not on " + P.space().tag);
  }
}

}  // namespace

RepHom buildTilde(const FinitePrecoalgebra& P, const LinearMap& phi, const ModuleElement& d) {
  return RepHom(fromPrecoalgebra(P, phi, d));
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verifyFactorization(const FinitePrecoalgebra& P, const LinearMap& phi,
                                       std::size_t bound, const VerifyHooks& hooks) {
  require_phi(P, phi);
  CheckResult c = make_check("factorization", bound);
  for (std::size_t k = 0; k < P.rank(); ++k) {
    ModuleElement b = ModuleElement::basis(P.space(), k);
    ModuleElement got = pi(hooks.tilde(P, phi, b));
    ModuleElement want = phi(b);
    if (!(got == want)) {
      fail(c, basis_name(k), "pi = " + got.to_string(), "phi = " + want.to_string());
      break;
    }
  }
  return VerificationReport{{c}};
}

VerificationReport verifyMorphism(const FinitePrecoalgebra& P, const LinearMap& phi,
                                  std::size_t bound, const VerifyHooks& hooks) {
  require_phi(P, phi);
  CheckResult eps = make_check("morphism-eps", std::nullopt);
  CheckResult del = make_check("morphism-delta", bound);
  ModuleSpace aug = augment(phi.codomain());
  std::vector<GradingTree> joins;
  if (bound >= 2) {
    for (const GradingTree& w : enumerate(bound)) {
      if (!w.is_leaf()) joins.push_back(w);
    }
  }
  for (std::size_t k = 0; k < P.rank(); ++k) {
    ModuleElement b = ModuleElement::basis(P.space(), k);
    RepHom f = hooks.tilde(P, phi, b);
    if (eps.passed) {
      Scalar got = epsilon(f);
      Scalar want = P.epsilon(b);
      if (!(got == want)) {
        fail(eps, basis_name(k), "epsilon = " + got.to_string(), "eps' = " + want.to_string());
      }
    }
    if (del.passed) {
      std::vector<SplitPair> lhs = delta(f);
      std::vector<SplitPair> rhs;
      for (const auto& [l, r] : hooks.split(P, b)) {
        rhs.push_back(SplitPair{hooks.tilde(P, phi, l), hooks.tilde(P, phi, r)});
      }
      for (const GradingTree& w : joins) {
        TensorElement a = phiEval(aug, lhs, w);
        TensorElement z = phiEval(aug, rhs, w);
        if (!(a == z)) {
          fail(del, basis_name(k) + ", t = " + w.left().text() + ", u = " + w.right().text(),
               a.to_string(), z.to_string());
          break;
        }
      }
    }
  }
  return VerificationReport{{eps, del}};
}

VerificationReport verifyUniquenessRecursion(const FinitePrecoalgebra& P, const LinearMap& phi,
                                             std::size_t bound, const VerifyHooks& hooks) {
  require_phi(P, phi);
  CheckResult c = make_check("uniqueness-recursion", bound);
  c.note = "determining formulae checked within the bound; not global uniqueness";
  Recursion recursion(P, phi, hooks);
  std::vector<GradingTree> trees = enumerate(std::max<std::size_t>(bound, 1));
  for (std::size_t k = 0; k < P.rank() && c.passed; ++k) {
    ModuleElement b = ModuleElement::basis(P.space(), k);
    RepHom f = hooks.tilde(P, phi, b);
    for (const GradingTree& t : trees) {
      TensorElement got = evaluate(f, t);
      TensorElement want = recursion.value(b, t);
      if (!(got == want)) {
        fail(c, basis_name(k) + ", t = " + t.text(), got.to_string(), want.to_string());
        break;
      }
    }
  }
  return VerificationReport{{c}};
}

TensorElement deltaThenLeft(const FinitePrecoalgebra& P, const ModuleElement& d) {
  TensorElement out = three_factor_zero(P);
  for (std::size_t k = 0; k < P.rank(); ++k) {
    if (d[k].is_zero()) continue;
    for (const auto& [lm, c] : P.delta_row(k)) {
      for (const auto& [lm2, c2] : P.delta_row(lm.first)) {
        out.add_term(index3(lm2.first, lm2.second, lm.second), d[k] * c * c2);
      }
    }
  }
  return out;
}

TensorElement deltaThenRight(const FinitePrecoalgebra& P, const ModuleElement& d) {
  TensorElement out = three_factor_zero(P);
  for (std::size_t k = 0; k < P.rank(); ++k) {
    if (d[k].is_zero()) continue;
    for (const auto& [lm, c] : P.delta_row(k)) {
      for (const auto& [lm2, c2] : P.delta_row(lm.second)) {
        out.add_term(index3(lm.first, lm2.first, lm2.second), d[k] * c * c2);
      }
    }
  }
  return out;
}

VerificationReport checkAdmissible(const FinitePrecoalgebra& P) {
  CheckResult coassoc = make_check("coassociativity", std::nullopt);
  CheckResult left = make_check("left-counit", std::nullopt);
  CheckResult right = make_check("right-counit", std::nullopt);
  for (std::size_t k = 0; k < P.rank(); ++k) {
    ModuleElement b = ModuleElement::basis(P.space(), k);
    if (coassoc.passed) {
      TensorElement l = deltaThenLeft(P, b);
      TensorElement r = deltaThenRight(P, b);
      if (!(l == r)) fail(coassoc, basis_name(k), l.to_string(), r.to_string());
    }
    // (ε′⊗id)δ′(b) and (id⊗ε′)δ′(b) against b.
    ModuleElement via_left(P.space());
    ModuleElement via_right(P.space());
    for (const auto& [lm, c] : P.delta_row(k)) {
      via_left = via_left + (c * P.eps(lm.first)) * ModuleElement::basis(P.space(), lm.second);
      via_right = via_right + (c * P.eps(lm.second)) * ModuleElement::basis(P.space(), lm.first);
    }
    if (left.passed && !(via_left == b)) {
      fail(left, basis_name(k), via_left.to_string(), b.to_string());
    }
    if (right.passed && !(via_right == b)) {
      fail(right, basis_name(k), via_right.to_string(), b.to_string());
    }
  }
  return VerificationReport{{coassoc, left, right}};
}

std::string formatVerification(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += c.name + ": " + (c.passed ? "pass" : "fail");
    if (c.bound) out += " (max-leaves " + std::to_string(*c.bound) + ")";
    out += "\n";
    if (c.witness) {
      out += "  at: " + c.witness->where + "\n";
      out += "  left: " + c.witness->left + "\n";
      out += "  right: " + c.witness->right + "\n";
    }
    if (!c.note.empty()) out += "  note: " + c.note + "\n";
  }
  return out;
}

nlohmann::ordered_json verificationJson(const VerificationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["verdict"] = c.passed ? "pass" : "fail";
    if (c.bound) j["max-leaves"] = *c.bound;
    if (c.witness) {
      j["witness"] = {{"at", c.witness->where},
                      {"left", c.witness->left},
                      {"right", c.witness->right}};
    }
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return checks;
}

}  // namespace cofree
