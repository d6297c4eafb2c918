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

#include "cofree/rep_hom.hpp"

#include "cofree/error.hpp"

namespace cofree {

namespace {

TensorElement zero_value(const ModuleSpace& augmented, std::size_t leaves) {
  return TensorElement(augmented.ring, std::vector<ModuleSpace>(leaves, augmented));
}

TensorElement evaluate_node(const GeneratingTree& sigma, const GradingTree& t) {
  if (t.is_leaf()) return TensorElement::of(sigma.label());
  const detail::GenNode& node = sigma.node();
  if (auto hit = node.memo_find(t.text())) return *hit;
  TensorElement out = zero_value(sigma.space(), t.leaf_count());
  GradingTree l = t.left();
  GradingTree r = t.right();
  std::size_t n = sigma.arity();
  for (std::size_t i = 1; i <= n; ++i) {
    TensorElement a = evaluate_node(sigma.child(Side::L, i), l);
    if (a.is_zero()) continue;
    TensorElement b = evaluate_node(sigma.child(Side::R, i), r);
    if (b.is_zero()) continue;
    out += tensorJoin(a, b);
  }
  node.memo_store(t.text(), out);
  return out;
}

}  // namespace

TensorElement evaluate(const RepHom& f, const GradingTree& t) {
  return evaluate_node(f.generator(), t);
}

std::vector<SplitPair> delta(const RepHom& f) {
  const GeneratingTree& sigma = f.generator();
  std::size_t n = sigma.arity();
  std::vector<SplitPair> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(SplitPair{RepHom(sigma.child(Side::L, i)), RepHom(sigma.child(Side::R, i))});
  }
  return out;
}

Scalar epsilon(const RepHom& f) { return prK(f.generator().label()); }

ModuleElement pi(const RepHom& f) { return prV(f.generator().label()); }

ModuleElement theta(const RepHom& f) { return f.generator().label(); }

bool equalUpTo(const RepHom& f, const RepHom& g, std::size_t maxLeaves, std::size_t cap) {
  if (!(f.space() == g.space())) return false;
  for (const GradingTree& t : enumerate(maxLeaves, cap)) {
    if (!(evaluate(f, t) == evaluate(g, t))) return false;
  }
  return true;
}

TensorElement phiEval(const ModuleSpace& augmented, const std::vector<SplitPair>& pairs,
                      const GradingTree& t) {
  TensorElement out = zero_value(augmented, t.leaf_count());
  if (t.is_leaf()) return out;
  for (const SplitPair& p : pairs) {
    if (!(p.left.space() == augmented) || !(p.right.space() == augmented)) {
      throw SpaceMismatch("split pair over a different space than " + augmented.tag);
    }
    out += tensorJoin(evaluate(p.left, t.left()), evaluate(p.right, t.right()));
  }
  return out;
}

std::vector<std::vector<RepHom>> iteratedDelta(const RepHom& f, long long n) {
  if (n < 1) throw InvalidArity("iterated comultiplication needs n >= 1");
  std::vector<std::vector<RepHom>> tuples{{f}};
  for (long long step = 1; step < n; ++step) {
    std::vector<std::vector<RepHom>> next;
    for (const auto& tuple : tuples) {
      for (const SplitPair& p : delta(tuple.front())) {
        std::vector<RepHom> expanded{p.left, p.right};
        expanded.insert(expanded.end(), tuple.begin() + 1, tuple.end());
        next.push_back(std::move(expanded));
      }
    }
    tuples = std::move(next);
  }
  return tuples;
}

}  // namespace cofree
