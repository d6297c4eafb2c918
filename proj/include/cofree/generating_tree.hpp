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

// Generating trees: possibly infinite trees whose nodes carry a label in
// V⊕K and 2n >= 2 children named L(1)..L(n), R(1)..R(n).
//
// Trees are values observed through label/arity/child. Infinite trees are
// produced lazily by combinators; expansion is memoized and the memo is
// safe under concurrent observation. Literal trees are finite: a node
// written with no children marks the truncation depth, and asking for its
// arity or children throws TruncationExceeded.
//
// Literal text form, children listed L(1)..L(n) R(1)..R(n):
//   node ::= "{" label-vector " children [" node* "]" "}"

#ifndef COFREE_GENERATING_TREE_HPP
#define COFREE_GENERATING_TREE_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cofree/module.hpp"
#include "cofree/precoalgebra.hpp"
#include "cofree/tensor.hpp"

namespace cofree {

enum class Side { L, R };

struct PositionSymbol {
  Side side;
  std::size_t index;  // 1-based

  friend bool operator==(const PositionSymbol&, const PositionSymbol&) = default;
};

// Empty sequence = the root.
using PositionSequence = std::vector<PositionSymbol>;

// "L(1)R(2)"; the root prints as "ε".
std::string formatPosition(const PositionSequence& s);
// Accepts the output of formatPosition (and "" for the root).
PositionSequence parsePosition(std::string_view text);

class GeneratingTree;

namespace detail {

// Observable behaviour of one node. Implementations are immutable apart
// from internally synchronized memo tables.
class GenNode {
 public:
  virtual ~GenNode() = default;

  virtual const ModuleElement& label() const = 0;
  virtual std::size_t arity() const = 0;
  // 1 <= index <= arity(), checked by the caller.
  virtual GeneratingTree child(Side side, std::size_t index) const = 0;
  virtual bool truncated() const { return false; }

  // Memo of homomorphism values keyed by grading-tree text.
  std::optional<TensorElement> memo_find(const std::string& key) const;
  void memo_store(const std::string& key, const TensorElement& value) const;

 private:
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, TensorElement> memo_;
};

}  // namespace detail

class GeneratingTree {
 public:
  explicit GeneratingTree(std::shared_ptr<const detail::GenNode> node);

  const ModuleElement& label() const { return node_->label(); }
  // The augmented space V⊕K the labels live in.
  const ModuleSpace& space() const { return node_->label().space(); }
  // Number n of child pairs. Throws TruncationExceeded on a truncated node.
  std::size_t arity() const { return node_->arity(); }
  // Throws InvalidPosition unless 1 <= index <= arity().
  GeneratingTree child(Side side, std::size_t index) const;
  // True for a Literal node written without children.
  bool truncated() const { return node_->truncated(); }

  const detail::GenNode& node() const { return *node_; }
  bool same_node(const GeneratingTree& other) const { return node_ == other.node_; }

 private:
  std::shared_ptr<const detail::GenNode> node_;
};

// σ⟦r⟧. Throws InvalidPosition or TruncationExceeded.
ModuleElement labelAt(const GeneratingTree& sigma, const PositionSequence& r);
// σ↾s.
GeneratingTree subtreeAt(const GeneratingTree& sigma, const PositionSequence& s);

// Root labelled σ⟦ε⟧+τ⟦ε⟧ whose children are σ's L-children, τ's
// L-children, σ's R-children, τ's R-children.
GeneratingTree sumTrees(const GeneratingTree& sigma, const GeneratingTree& tau);

// Labels at positions made only of L-symbols (the root included) are
// multiplied by lambda; every other label is unchanged.
GeneratingTree scaleTree(const Scalar& lambda, const GeneratingTree& sigma);

// Arity 1, every label 0; infinite.
GeneratingTree zeroTree(const ModuleSpace& augmented);

// A node with explicit children (listed L(1)..L(n) R(1)..R(n)). An empty
// child list gives a truncated node. Throws OddChildCount and
// SpaceMismatch.
GeneratingTree makeNode(const ModuleElement& label, std::vector<GeneratingTree> children);

// σ(d): label ε′(d_r)+φ(d_r) at position r, where d_r follows
// canonicalSplit. Nodes are shared between equal elements, so e.g. a
// group-like element yields a single self-similar node.
GeneratingTree fromPrecoalgebra(const FinitePrecoalgebra& P, const LinearMap& phi,
                                const ModuleElement& d);

// Parses the Literal text form over the augmented space. Throws SyntaxError
// and OddChildCount.
GeneratingTree literalTree(std::string_view text, const ModuleSpace& augmented);

// Literal text of σ. Nodes deeper than `max_depth` (when given) and
// truncated nodes are written with no children; formatLiteral inverts
// literalTree exactly. Without a depth bound, throws BoundTooLarge once the
// output passes 100000 nodes or 256 levels (an infinite tree).
std::string formatLiteral(const GeneratingTree& sigma,
                          std::optional<std::size_t> max_depth = std::nullopt);

// Generating-tree fixture files:
//   ring Z | ring Zmod n | ring Q
//   rankV r
//   tree <literal node text, may span lines> | tree zero
struct TreeFixture {
  ModuleSpace base;  // V
  GeneratingTree tree;
};

TreeFixture parseTreeFixture(std::string_view text,
                             std::optional<Ring> ring_override = std::nullopt);

}  // namespace cofree

#endif  // COFREE_GENERATING_TREE_HPP
