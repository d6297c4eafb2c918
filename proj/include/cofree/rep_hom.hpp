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

// Representative homomorphisms f : T K -> T(V⊕K), each generated by a
// generating tree, with the precoalgebra structure (δ, ε, π).
//
// Values are computed by the recursion
//   f(·) = σ⟦ε⟧,   f(t⊔u) = Σ_i f_{L(i)}(t) ⋈ f_{R(i)}(u),
// memoized per generating-tree node. Equality of homomorphisms is only
// semidecided: equalUpTo compares values on all trees up to a leaf bound.

#ifndef COFREE_REP_HOM_HPP
#define COFREE_REP_HOM_HPP

#include <cstddef>
#include <vector>

#include "cofree/generating_tree.hpp"
#include "cofree/grading_tree.hpp"
#include "cofree/module.hpp"
#include "cofree/tensor.hpp"

namespace cofree {

class RepHom {
 public:
  explicit RepHom(GeneratingTree generator) : generator_(std::move(generator)) {}

  const GeneratingTree& generator() const { return generator_; }
  // The augmented space V⊕K of the output factors.
  const ModuleSpace& space() const { return generator_.space(); }

 private:
  GeneratingTree generator_;
};

// f(t) in (V⊕K)^⊗leafCount(t). Throws TruncationExceeded when a literal
// generator is too shallow for t.
TensorElement evaluate(const RepHom& f, const GradingTree& t);

// (g_i, h_i) generated by σ↾L(i) and σ↾R(i).
struct SplitPair {
  RepHom left;
  RepHom right;
};

std::vector<SplitPair> delta(const RepHom& f);
// K component of f(·).
Scalar epsilon(const RepHom& f);
// V component of f(·).
ModuleElement pi(const RepHom& f);
// f(·) as an element of V⊕K.
ModuleElement theta(const RepHom& f);

// True iff f and g agree on every grading tree with at most maxLeaves
// leaves. A semidecision: true does not prove f == g.
bool equalUpTo(const RepHom& f, const RepHom& g, std::size_t maxLeaves,
               std::size_t cap = kDefaultEnumerationCap);

// Φ(Σ g_i⊗h_i) at t: 0 at the trivial tree, Σ g_i(t_l) ⋈ h_i(t_r) at
// t_l⊔t_r. `augmented` fixes the shape of the zero value.
TensorElement phiEval(const ModuleSpace& augmented, const std::vector<SplitPair>& pairs,
                      const GradingTree& t);

// ⟦δ⟧^n with the leftmost factor expanded at each step. Throws InvalidArity
// for n < 1.
std::vector<std::vector<RepHom>> iteratedDelta(const RepHom& f, long long n);

}  // namespace cofree

#endif  // COFREE_REP_HOM_HPP
