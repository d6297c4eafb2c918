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

#include "cofree/generating_tree.hpp"

#include <cctype>
#include <map>

#include "cofree/error.hpp"

namespace cofree {

namespace detail {

std::optional<TensorElement> GenNode::memo_find(const std::string& key) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void GenNode::memo_store(const std::string& key, const TensorElement& value) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.try_emplace(key, value);
}

}  // namespace detail

namespace {

using detail::GenNode;

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

class LiteralNode final : public GenNode {
 public:
  LiteralNode(ModuleElement label, std::vector<GeneratingTree> children, std::string position)
      : label_(std::move(label)), children_(std::move(children)), position_(std::move(position)) {}

  const ModuleElement& label() const override { return label_; }

  std::size_t arity() const override {
    if (children_.empty()) {
      throw TruncationExceeded(position_.empty()
                                   ? "literal generating tree truncated at a node labelled " +
                                         label_.to_string()
                                   : "literal generating tree truncated at position " + position_);
    }
    return children_.size() / 2;
  }

  GeneratingTree child(Side side, std::size_t index) const override {
    std::size_t n = arity();
    return children_[(side == Side::L ? 0 : n) + index - 1];
  }

  bool truncated() const override { return children_.empty(); }

 private:
  ModuleElement label_;
  std::vector<GeneratingTree> children_;
  std::string position_;
};

class ZeroNode final : public GenNode, public std::enable_shared_from_this<ZeroNode> {
 public:
  explicit ZeroNode(const ModuleSpace& augmented) : label_(augmented) {}

  const ModuleElement& label() const override { return label_; }
  std::size_t arity() const override { return 1; }
  GeneratingTree child(Side, std::size_t) const override {
    return GeneratingTree(shared_from_this());
  }

 private:
  ModuleElement label_;
};

class SumNode final : public GenNode {
 public:
  SumNode(GeneratingTree sigma, GeneratingTree tau)
      : sigma_(std::move(sigma)), tau_(std::move(tau)), label_(sigma_.label() + tau_.label()) {}

  const ModuleElement& label() const override { return label_; }
  std::size_t arity() const override { return sigma_.arity() + tau_.arity(); }

  GeneratingTree child(Side side, std::size_t index) const override {
    std::size_t n = sigma_.arity();
    return index <= n ? sigma_.child(side, index) : tau_.child(side, index - n);
  }

 private:
  GeneratingTree sigma_;
  GeneratingTree tau_;
  ModuleElement label_;
};

class ScaleNode final : public GenNode {
 public:
  ScaleNode(Scalar lambda, GeneratingTree inner)
      : lambda_(std::move(lambda)), inner_(std::move(inner)), label_(lambda_ * inner_.label()) {}

  const ModuleElement& label() const override { return label_; }
  std::size_t arity() const override { return inner_.arity(); }

  GeneratingTree child(Side side, std::size_t index) const override {
    if (side == Side::R) return inner_.child(side, index);
    std::lock_guard<std::mutex> lock(mutex_);
    if (left_.empty()) left_.resize(inner_.arity());
    auto& slot = left_[index - 1];
    if (!slot) slot = std::make_shared<ScaleNode>(lambda_, inner_.child(Side::L, index));
    return GeneratingTree(slot);
  }

 private:
  Scalar lambda_;
  GeneratingTree inner_;
  ModuleElement label_;
  mutable std::mutex mutex_;
  mutable std::vector<std::shared_ptr<const GenNode>> left_;
};

class PrecoalgebraArena;

class PrecoalgebraNode final : public GenNode {
 public:
  PrecoalgebraNode(const PrecoalgebraArena* arena, ModuleElement label, SplitPairs split)
      : arena_(arena), label_(std::move(label)), split_(std::move(split)) {}

  const ModuleElement& label() const override { return label_; }
  std::size_t arity() const override { return split_.size(); }
  GeneratingTree child(Side side, std::size_t index) const override;

 private:
  const PrecoalgebraArena* arena_;
  ModuleElement label_;
  SplitPairs split_;
  mutable std::once_flag expanded_;
  mutable std::vector<const PrecoalgebraNode*> left_;
  mutable std::vector<const PrecoalgebraNode*> right_;
};

// Owns every node reachable from one σ(d); nodes are interned by element so
// repeated elements share a node (and its memo). Handles to nodes alias the
// arena's control block, which keeps the arena alive without cycles.
class PrecoalgebraArena : public std::enable_shared_from_this<PrecoalgebraArena> {
 public:
  PrecoalgebraArena(FinitePrecoalgebra P, LinearMap phi)
      : P_(std::move(P)), phi_(std::move(phi)), augmented_(augment(phi_.codomain())) {}

  const PrecoalgebraNode* intern(const ModuleElement& d) const {
    std::string key = d.to_csv();
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = nodes_.find(key);
    if (it != nodes_.end()) return it->second.get();
    ModuleElement label = embedV(phi_(d)) + embedK(augmented_, P_.epsilon(d));
    auto node = std::make_unique<PrecoalgebraNode>(this, std::move(label), canonicalSplit(P_, d));
    const PrecoalgebraNode* raw = node.get();
    nodes_.emplace(std::move(key), std::move(node));
    return raw;
  }

  GeneratingTree handle(const PrecoalgebraNode* node) const {
    return GeneratingTree(std::shared_ptr<const GenNode>(shared_from_this(), node));
  }

 private:
  FinitePrecoalgebra P_;
  LinearMap phi_;
  ModuleSpace augmented_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::unique_ptr<PrecoalgebraNode>> nodes_;
};

GeneratingTree PrecoalgebraNode::child(Side side, std::size_t index) const {
  std::call_once(expanded_, [this] {
    for (const auto& [l, r] : split_) {
      left_.push_back(arena_->intern(l));
      right_.push_back(arena_->intern(r));
    }
  });
  return arena_->handle(side == Side::L ? left_[index - 1] : right_[index - 1]);
}

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const ModuleSpace& augmented)
      : text_(text), augmented_(augmented) {}

  GeneratingTree parse() {
    PositionSequence path;
    GeneratingTree t = node(path);
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing characters after literal tree", pos_);
    return t;
  }

 private:
  GeneratingTree node(PositionSequence& path) {
    skip_ws();
    expect('{');
    std::size_t label_start = pos_;
    std::size_t kw = text_.find("children", pos_);
    if (kw == std::string_view::npos) throw SyntaxError("expected 'children'", pos_);
    ModuleElement label = parse_label(text_.substr(label_start, kw - label_start), label_start);
    pos_ = kw + std::string_view("children").size();
    skip_ws();
    expect('[');
    // Locate the children first so positions can be named once the arity
    // is known.
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) throw SyntaxError("unterminated child list", pos_);
      if (text_[pos_] == ']') break;
      std::size_t begin = pos_;
      skip_balanced();
      spans.emplace_back(begin, pos_);
    }
    ++pos_;
    skip_ws();
    expect('}');
    std::size_t end = pos_;
    if (spans.size() % 2 != 0) {
      throw OddChildCount("node at " + formatPosition(path) + " has " +
                          std::to_string(spans.size()) + " children");
    }
    std::size_t n = spans.size() / 2;
    std::vector<GeneratingTree> children;
    children.reserve(spans.size());
    for (std::size_t c = 0; c < spans.size(); ++c) {
      path.push_back(PositionSymbol{c < n ? Side::L : Side::R, c % n + 1});
      pos_ = spans[c].first;
      children.push_back(node(path));
      path.pop_back();
    }
    pos_ = end;
    return GeneratingTree(std::make_shared<LiteralNode>(std::move(label), std::move(children),
                                                        formatPosition(path)));
  }

  ModuleElement parse_label(std::string_view body, std::size_t offset) {
    std::vector<Scalar> coords;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      std::string_view part = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
      coords.push_back(Scalar::parse(augmented_.ring, trim_copy(part)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (coords.size() != augmented_.rank) {
      throw SyntaxError("label has " + std::to_string(coords.size()) + " coordinates, expected " +
                            std::to_string(augmented_.rank),
                        offset);
    }
    return ModuleElement(augmented_, std::move(coords));
  }

  void skip_balanced() {
    if (text_[pos_] != '{') throw SyntaxError("expected '{'", pos_);
    int depth = 0;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == '{') ++depth;
      if (text_[pos_] == '}' && --depth == 0) {
        ++pos_;
        return;
      }
    }
    throw SyntaxError("unbalanced braces", pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string_view text_;
  const ModuleSpace& augmented_;
  std::size_t pos_ = 0;
};

constexpr std::size_t kUnboundedNodeBudget = 100000;
constexpr std::size_t kUnboundedDepth = 256;

void format_node(const GeneratingTree& t, std::size_t depth, std::optional<std::size_t> max_depth,
                 std::size_t& budget, std::string& out) {
  if (!max_depth && (budget-- == 0 || depth > kUnboundedDepth)) {
    throw BoundTooLarge("formatting more than " + std::to_string(kUnboundedNodeBudget) +
                        " nodes or " + std::to_string(kUnboundedDepth) +
                        " levels; pass a depth bound");
  }
  out += '{';
  out += t.label().to_csv();
  out += " children [";
  if (!t.truncated() && (!max_depth || depth < *max_depth)) {
    std::size_t n = t.arity();
    bool first = true;
    for (Side side : {Side::L, Side::R}) {
      for (std::size_t i = 1; i <= n; ++i) {
        if (!first) out += ' ';
        first = false;
        format_node(t.child(side, i), depth + 1, max_depth, budget, out);
      }
    }
  }
  out += "]}";
}

}  // namespace

std::string formatPosition(const PositionSequence& s) {
  if (s.empty()) return "ε";
  std::string out;
  for (const auto& sym : s) {
    out += sym.side == Side::L ? "L(" : "R(";
    out += std::to_string(sym.index);
    out += ')';
  }
  return out;
}

PositionSequence parsePosition(std::string_view text) {
  PositionSequence out;
  if (text == "ε" || text.empty()) return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c != 'L' && c != 'R') throw SyntaxError("expected L or R", pos);
    if (pos + 1 >= text.size() || text[pos + 1] != '(') throw SyntaxError("expected '('", pos + 1);
    std::size_t close = text.find(')', pos + 2);
    if (close == std::string_view::npos) throw SyntaxError("expected ')'", text.size());
    std::size_t index = 0;
    if (close == pos + 2) throw SyntaxError("expected an index", pos + 2);
    for (std::size_t i = pos + 2; i < close; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw SyntaxError("expected a digit", i);
      index = index * 10 + static_cast<std::size_t>(text[i] - '0');
    }
    if (index < 1) throw SyntaxError("position indices start at 1", pos + 2);
    out.push_back(PositionSymbol{c == 'L' ? Side::L : Side::R, index});
    pos = close + 1;
  }
  return out;
}

GeneratingTree::GeneratingTree(std::shared_ptr<const detail::GenNode> node)
    : node_(std::move(node)) {}

GeneratingTree GeneratingTree::child(Side side, std::size_t index) const {
  std::size_t n = arity();
  if (index < 1 || index > n) {
    throw InvalidPosition(std::string(side == Side::L ? "L(" : "R(") + std::to_string(index) +
                          ") at a node of arity " + std::to_string(n));
  }
  return node_->child(side, index);
}

GeneratingTree subtreeAt(const GeneratingTree& sigma, const PositionSequence& s) {
  GeneratingTree t = sigma;
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::size_t n = t.arity();
    if (s[k].index < 1 || s[k].index > n) {
      PositionSequence prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      throw InvalidPosition("position " + formatPosition(prefix) + " exceeds arity " +
                            std::to_string(n));
    }
    t = t.child(s[k].side, s[k].index);
  }
  return t;
}

ModuleElement labelAt(const GeneratingTree& sigma, const PositionSequence& r) {
  return subtreeAt(sigma, r).label();
}

GeneratingTree sumTrees(const GeneratingTree& sigma, const GeneratingTree& tau) {
  if (!(sigma.space() == tau.space())) {
    throw SpaceMismatch("sum of generating trees over " + sigma.space().tag + " and " +
                        tau.space().tag);
  }
  return GeneratingTree(std::make_shared<SumNode>(sigma, tau));
}

GeneratingTree scaleTree(const Scalar& lambda, const GeneratingTree& sigma) {
  if (!(lambda.ring() == sigma.space().ring)) {
    throw MixedRings("scalar over " + lambda.ring().to_string() + " for a tree over " +
                     sigma.space().ring.to_string());
  }
  return GeneratingTree(std::make_shared<ScaleNode>(lambda, sigma));
}

GeneratingTree zeroTree(const ModuleSpace& augmented) {
  if (!augmented.is_augmented()) throw SpaceMismatch(augmented.tag + " is not of the form V+K");
  return GeneratingTree(std::make_shared<ZeroNode>(augmented));
}

GeneratingTree makeNode(const ModuleElement& label, std::vector<GeneratingTree> children) {
  if (!label.space().is_augmented()) {
    throw SpaceMismatch("generating-tree labels live in V+K, got " + label.space().tag);
  }
  if (children.size() % 2 != 0) {
    throw OddChildCount("node with " + std::to_string(children.size()) + " children");
  }
  for (const auto& c : children) {
    if (!(c.space() == label.space())) throw SpaceMismatch("child over a different space");
  }
  return GeneratingTree(std::make_shared<LiteralNode>(label, std::move(children), ""));
}

GeneratingTree fromPrecoalgebra(const FinitePrecoalgebra& P, const LinearMap& phi,
                                const ModuleElement& d) {
  if (!(phi.domain() == P.space())) {
    throw SpaceMismatch("phi is defined on " + phi.domain().tag + ", not on " + P.space().tag);
  }
  if (!(d.space() == P.space())) {
    throw SpaceMismatch("element of " + d.space().tag + " is not in " + P.space().tag);
  }
  auto arena = std::make_shared<PrecoalgebraArena>(P, phi);
  return arena->handle(arena->intern(d));
}

GeneratingTree literalTree(std::string_view text, const ModuleSpace& augmented) {
  if (!augmented.is_augmented()) throw SpaceMismatch(augmented.tag + " is not of the form V+K");
  return LiteralParser(text, augmented).parse();
}

std::string formatLiteral(const GeneratingTree& sigma, std::optional<std::size_t> max_depth) {
  std::string out;
  std::size_t budget = kUnboundedNodeBudget;
  format_node(sigma, 0, max_depth, budget, out);
  return out;
}

TreeFixture parseTreeFixture(std::string_view text, std::optional<Ring> ring_override) {
  std::optional<Ring> ring;
  std::optional<std::size_t> rank_v;
  std::optional<std::string> tree_text;
  std::size_t tree_offset = 0;
  std::size_t start = 0;
  while (start <= text.size() && !tree_text) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim_copy(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') {
      std::size_t sp = line.find_first_of(" \t");
      std::string key = line.substr(0, sp);
      std::string rest = sp == std::string::npos ? "" : trim_copy(line.substr(sp + 1));
      if (key == "ring") {
        ring = Ring::parse(rest);
      } else if (key == "rankV") {
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
          throw SyntaxError("expected a nonnegative integer after rankV", start);
        }
        rank_v = std::stoul(rest);
      } else if (key == "tree") {
        std::size_t body = text.find("tree", start) + 4;
        tree_text = std::string(text.substr(body));
        tree_offset = body;
      } else {
        throw SyntaxError("unknown directive '" + key + "'", start);
      }
    }
    start = end + 1;
  }
  if (!ring) throw SyntaxError("missing ring line", 0);
  if (!rank_v) throw SyntaxError("missing rankV line", 0);
  if (!tree_text) throw SyntaxError("missing tree", text.size());
  if (ring_override) ring = ring_override;
  ModuleSpace base = ModuleSpace::plain(*ring, *rank_v, "V");
  ModuleSpace aug = augment(base);
  if (trim_copy(*tree_text) == "zero") return TreeFixture{base, zeroTree(aug)};
  try {
    return TreeFixture{base, literalTree(*tree_text, aug)};
  } catch (const SyntaxError& e) {
    throw SyntaxError(std::string("in tree: ") + e.what(), tree_offset + e.position);
  }
}

}  // namespace cofree
