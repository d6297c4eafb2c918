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

// The couniversal morphism φ̃ : D -> Rep(V) of a finite precoalgebra D with a
// linear map φ : D -> V, and bounded verification that it factors φ
// through π, is a precoalgebra morphism, and is the map determined by its
// defining recursion. None of this needs D to be coassociative or counital;
// checkAdmissible reports whether it is.

#ifndef COFREE_COUNIVERSAL_HPP
#define COFREE_COUNIVERSAL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cofree/precoalgebra.hpp"
#include "cofree/rep_hom.hpp"

namespace cofree {

// φ̃(d), generated by fromPrecoalgebra(P, φ, d). Throws SpaceMismatch.
RepHom buildTilde(const FinitePrecoalgebra& P, const LinearMap& phi, const ModuleElement& d);

struct CheckWitness {
  std::string where;  // e.g. "b1" or "b1, t = *, u = (* *)"
  std::string left;
  std::string right;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> bound;  // absent for exact checks
  std::optional<CheckWitness> witness;  // present iff !passed
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  // The named check, or nullptr.
  const CheckResult* find(const std::string& name) const;
};

// Replaceable pieces of the construction, so that verification can be run
// against deliberately broken inputs.
struct VerifyHooks {
  std::function<RepHom(const FinitePrecoalgebra&, const LinearMap&, const ModuleElement&)> tilde =
      buildTilde;
  std::function<SplitPairs(const FinitePrecoalgebra&, const ModuleElement&)> split =
      canonicalSplit;
};

// π(φ̃(b_k)) = φ(b_k) for every basis element. Exact.
VerificationReport verifyFactorization(const FinitePrecoalgebra& P, const LinearMap& phi,
                                       std::size_t bound, const VerifyHooks& hooks = {});

// For every basis element d: ε(φ̃(d)) = ε′(d) exactly ("morphism-eps"), and
// δ(φ̃(d)) agrees with Σ_i φ̃(d_L(i))⊗φ̃(d_R(i)) under Φ on every tree with at
// most `bound` leaves ("morphism-delta").
VerificationReport verifyMorphism(const FinitePrecoalgebra& P, const LinearMap& phi,
                                  std::size_t bound, const VerifyHooks& hooks = {});

// Recomputes φ̃(d)(t) from φ̃(d)(·) = φ(d)+ε′(d) and
// φ̃(d)(t⊔u) = Σ_i φ̃(d_L(i))(t) ⋈ φ̃(d_R(i))(u) without the generating tree
// and compares with evaluate, for basis d and trees with at most `bound`
// leaves. This checks the determining formulae within the bound, not global
// uniqueness.
VerificationReport verifyUniquenessRecursion(const FinitePrecoalgebra& P, const LinearMap& phi,
                                             std::size_t bound, const VerifyHooks& hooks = {});

// Coassociativity and both counit identities on every basis element, by
// exact table arithmetic. Checks: "coassociativity", "left-counit",
// "right-counit".
VerificationReport checkAdmissible(const FinitePrecoalgebra& P);

// (δ′⊗id)δ′(d) and (id⊗δ′)δ′(d) as 3-factor tensors over D.
TensorElement deltaThenLeft(const FinitePrecoalgebra& P, const ModuleElement& d);
TensorElement deltaThenRight(const FinitePrecoalgebra& P, const ModuleElement& d);

std::string formatVerification(const VerificationReport& report);
nlohmann::ordered_json verificationJson(const VerificationReport& report);

}  // namespace cofree

#endif  // COFREE_COUNIVERSAL_HPP
