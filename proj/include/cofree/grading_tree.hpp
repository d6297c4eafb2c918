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

// Finite full binary trees. They index the basis of the free module on
// which representative homomorphisms are evaluated.
//
// Text form: t ::= "*" | "(" t " " t ")".

#ifndef COFREE_GRADING_TREE_HPP
#define COFREE_GRADING_TREE_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cofree {

class GradingTree {
 public:
  // The trivial tree.
  GradingTree();

  static GradingTree leaf() { return GradingTree(); }

  bool is_leaf() const { return node_->left == nullptr; }
  // Precondition: !is_leaf().
  GradingTree left() const { return GradingTree(node_->left); }
  GradingTree right() const { return GradingTree(node_->right); }

  std::size_t leaf_count() const { return node_->leaves; }
  std::size_t depth() const { return node_->depth; }
  // Canonical serialization; also the identity of the tree.
  const std::string& text() const { return node_->text; }

  friend GradingTree join(const GradingTree& t, const GradingTree& u);

  friend bool operator==(const GradingTree& a, const GradingTree& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }

 private:
  struct Node {
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t leaves = 1;
    std::size_t depth = 0;
    std::string text;
  };

  explicit GradingTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::shared_ptr<const Node> leaf_node();

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const GradingTree& t);

// t⊔u: a new root whose left and right subtrees are t and u.
GradingTree join(const GradingTree& t, const GradingTree& u);

inline std::size_t leafCount(const GradingTree& t) { return t.leaf_count(); }

// Number of full binary trees with exactly n leaves (Catalan(n-1)).
unsigned long long countWithLeaves(std::size_t n);

inline constexpr std::size_t kDefaultEnumerationCap = 200000;

// Every tree with leafCount <= maxLeaves, ordered by leaf count and then by
// text. Throws BoundTooLarge when more than `cap` trees would be produced
// and InvalidArity when maxLeaves < 1.
std::vector<GradingTree> enumerate(std::size_t maxLeaves,
                                   std::size_t cap = kDefaultEnumerationCap);

// Exactly n leaves, same ordering.
std::vector<GradingTree> enumerateWithLeaves(std::size_t n,
                                             std::size_t cap = kDefaultEnumerationCap);

// The comb with n leaves whose right children are all leaves:
// t1 = *, t_n = (t_{n-1} *).
GradingTree leftComb(std::size_t n);

GradingTree parseTree(std::string_view text);
inline const std::string& formatTree(const GradingTree& t) { return t.text(); }

// Root-to-leaf paths over {L, R}, leaves from left to right.
std::vector<std::string> leaves(const GradingTree& t);

}  // namespace cofree

#endif  // COFREE_GRADING_TREE_HPP
