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

#include "cofree/grading_tree.hpp"

#include <algorithm>
#include <ostream>

#include "cofree/error.hpp"

namespace cofree {

GradingTree::GradingTree() : node_(leaf_node()) {}

std::shared_ptr<const GradingTree::Node> GradingTree::leaf_node() {
  static const auto leaf = [] {
    auto n = std::make_shared<Node>();
    n->text = "*";
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return leaf;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  GradingTree parse() {
    GradingTree t = tree();
    if (pos_ != text_.size()) throw SyntaxError("trailing characters after tree", pos_);
    return t;
  }

 private:
  GradingTree tree() {
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of tree", pos_);
    if (text_[pos_] == '*') {
      ++pos_;
      return GradingTree::leaf();
    }
    expect('(');
    GradingTree l = tree();
    expect(' ');
    GradingTree r = tree();
    expect(')');
    return join(l, r);
  }

  void expect(char c) {
    if (pos_ >= text_.size()) {
      throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
    }
    if (text_[pos_] != c) {
      throw SyntaxError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_leaves(const GradingTree& t, std::string& path, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    out.push_back(path);
    return;
  }
  path.push_back('L');
  collect_leaves(t.left(), path, out);
  path.back() = 'R';
  collect_leaves(t.right(), path, out);
  path.pop_back();
}

}  // namespace

GradingTree join(const GradingTree& t, const GradingTree& u) {
  auto n = std::make_shared<GradingTree::Node>();
  n->left = t.node_;
  n->right = u.node_;
  n->leaves = t.leaf_count() + u.leaf_count();
  n->depth = 1 + std::max(t.depth(), u.depth());
  n->text.reserve(t.text().size() + u.text().size() + 3);
  n->text += '(';
  n->text += t.text();
  n->text += ' ';
  n->text += u.text();
  n->text += ')';
  return GradingTree(std::shared_ptr<const GradingTree::Node>(std::move(n)));
}

std::ostream& operator<<(std::ostream& os, const GradingTree& t) { return os << t.text(); }

unsigned long long countWithLeaves(std::size_t n) {
  if (n == 0) return 0;
  // Catalan(n-1) by the convolution recurrence; saturates instead of
  // overflowing so callers can compare against a cap.
  constexpr unsigned long long kSaturated = ~0ULL;
  std::vector<unsigned long long> c(n, 0);
  c[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    unsigned long long sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      unsigned long long a = c[i], b = c[m - 1 - i];
      if (a != 0 && b > kSaturated / a) return kSaturated;
      unsigned long long p = a * b;
      if (sum > kSaturated - p) return kSaturated;
      sum += p;
    }
    c[m] = sum;
  }
  return c[n - 1];
}

std::vector<GradingTree> enumerateWithLeaves(std::size_t n, std::size_t cap) {
  if (n < 1) throw InvalidArity("grading trees have at least one leaf");
  if (countWithLeaves(n) > cap) {
    throw BoundTooLarge("enumerating trees with " + std::to_string(n) + " leaves exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<std::vector<GradingTree>> by_leaves(n + 1);
  by_leaves[1].push_back(GradingTree::leaf());
  for (std::size_t m = 2; m <= n; ++m) {
    for (std::size_t l = 1; l < m; ++l) {
      for (const auto& a : by_leaves[l]) {
        for (const auto& b : by_leaves[m - l]) by_leaves[m].push_back(join(a, b));
      }
    }
  }
  std::vector<GradingTree> out = std::move(by_leaves[n]);
  std::sort(out.begin(), out.end(),
            [](const GradingTree& a, const GradingTree& b) { return a.text() < b.text(); });
  return out;
}

std::vector<GradingTree> enumerate(std::size_t maxLeaves, std::size_t cap) {
  if (maxLeaves < 1) throw InvalidArity("maxLeaves must be at least 1");
  unsigned long long total = 0;
  for (std::size_t n = 1; n <= maxLeaves; ++n) {
    unsigned long long c = countWithLeaves(n);
    total = (c > cap || total + c > cap) ? cap + 1ULL : total + c;
  }
  if (total > cap) {
    throw BoundTooLarge("enumerating trees with up to " + std::to_string(maxLeaves) +
                        " leaves exceeds cap " + std::to_string(cap));
  }
  std::vector<GradingTree> out;
  for (std::size_t n = 1; n <= maxLeaves; ++n) {
    auto level = enumerateWithLeaves(n, cap);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

GradingTree leftComb(std::size_t n) {
  if (n < 1) throw InvalidArity("leftComb needs n >= 1");
  GradingTree t;
  for (std::size_t k = 1; k < n; ++k) t = join(t, GradingTree::leaf());
  return t;
}

GradingTree parseTree(std::string_view text) { return TreeParser(text).parse(); }

std::vector<std::string> leaves(const GradingTree& t) {
  std::vector<std::string> out;
  std::string path;
  collect_leaves(t, path, out);
  return out;
}

}  // namespace cofree
