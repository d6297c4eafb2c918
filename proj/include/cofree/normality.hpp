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

// Projected evaluation σ⟦t∥α⟧, bounded normality and admissibility checks
// on generating trees, and the degree family σ⟦0⟧, σ⟦1⟧, ...
//
// Every check quantifies over finitely many grading trees, so a pass only
// means no counterexample exists within the stated bounds. Sweeps follow a
// fixed order (trees as enumerated, tuples lexicographic with K < V < Id),
// so the witness reported on failure is deterministic.

#ifndef COFREE_NORMALITY_HPP
#define COFREE_NORMALITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cofree/generating_tree.hpp"
#include "cofree/grading_tree.hpp"
#include "cofree/tensor.hpp"

namespace cofree {

using ProjectionTuple = std::vector<Projection>;

// "V,K,I"; the empty tuple prints as "".
std::string formatTuple(const ProjectionTuple& alpha);
ProjectionTuple parseTuple(std::string_view text);

// True iff no Id entry occurs.
bool isPlain(const ProjectionTuple& alpha);
// Number of V entries. Throws NotPlain on a generalized tuple.
std::size_t pdeg(const ProjectionTuple& alpha);
// alpha with the K entries removed.
ProjectionTuple pcan(const ProjectionTuple& alpha);

// All tuples of length n over {K, V} (plain) or {K, V, Id}, in lexicographic
// order with K < V < Id.
std::vector<ProjectionTuple> plainTuples(std::size_t n);
std::vector<ProjectionTuple> generalizedTuples(std::size_t n);

// σ⟦t∥α⟧: the value f(t) projected factorwise, unit factors dropped. Throws
// ArityMismatch unless alpha has leafCount(t) entries.
TensorElement evalProjected(const GeneratingTree& sigma, const GradingTree& t,
                            const ProjectionTuple& alpha);

// One side of a failed comparison.
struct Observation {
  GradingTree tree;
  ProjectionTuple tuple;
  TensorElement value;
};

struct NormalityWitness {
  // Subtree σ↾s the failure was found in (the root for checks on σ itself).
  PositionSequence position;
  Observation first;
  Observation second;
  // Extra context, e.g. which side of a composite the second value is.
  std::string note;
};

struct NormalityReport {
  std::string check;
  std::size_t max_leaves = 0;
  std::optional<std::size_t> max_depth;
  bool passed = true;
  std::optional<NormalityWitness> witness;  // present iff !passed
};

// σ⟦t∥α⟧ = σ⟦u∥β⟧ whenever pdeg(α) = pdeg(β), over plain tuples and trees
// with at most maxLeaves leaves. Each observation is compared with the first
// one of the same pdeg. Throws BoundTooLarge.
NormalityReport isWeaklyNormalUpTo(const GeneratingTree& sigma, std::size_t maxLeaves);

// Weak normality of σ↾s for every position sequence s of length at most
// maxDepth, visited by length and then child order L(1)..L(n) R(1)..R(n).
// Subtrees that share a node are checked once.
NormalityReport isNormalUpTo(const GeneratingTree& sigma, std::size_t maxLeaves,
                             std::size_t maxDepth);

// σ⟦t∥α⟧ = σ⟦u∥β⟧ whenever pcan(α) = pcan(β), over generalized tuples.
NormalityReport checkGeneralizedNonproj(const GeneratingTree& sigma, std::size_t maxLeaves);

// f((t⊔u)⊔v) = f(t⊔(u⊔v)) for all t, u, v with at most maxLeaves leaves in
// total.
NormalityReport checkCoassociativityUpTo(const GeneratingTree& sigma, std::size_t maxLeaves);

// f(t) = σ⟦·⊔t∥(K,Id,...,Id)⟧ = σ⟦t⊔·∥(Id,...,Id,K)⟧ for all t with at most
// maxLeaves leaves.
NormalityReport checkCounitalityUpTo(const GeneratingTree& sigma, std::size_t maxLeaves);

// For n = 1..maxN and every plain tuple α of length n with a = pdeg(α):
// σ⟦t_n∥α⟧ = π^⊗a(⟦δ⟧^a(f)), where t_n is the left comb. For a = 0 the
// right side is ε(f).
NormalityReport checkCompositeEqualityUpTo(const GeneratingTree& sigma, std::size_t maxN);

// σ⟦n⟧ in V^⊗n: σ⟦t_n∥(V,...,V)⟧ for n >= 1 and prK(f(·)) for n = 0.
// Does not check weak normality. Throws InvalidArity for n < 0.
TensorElement sigmaOfN(const GeneratingTree& sigma, long long n);

// [σ⟦0⟧, ..., σ⟦N⟧]. Throws InvalidArity for N < 0.
std::vector<TensorElement> blFamily(const GeneratingTree& sigma, long long N);

std::string formatReport(const NormalityReport& report);
nlohmann::ordered_json reportJson(const NormalityReport& report);

}  // namespace cofree

#endif  // COFREE_NORMALITY_HPP
