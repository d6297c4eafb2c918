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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cofree/error.hpp"
#include "cofree/rep_hom.hpp"
#include "oracle.hpp"

using namespace cofree;

namespace {

const Ring Z = Ring::integers();
const GradingTree dot = GradingTree::leaf();

ModuleSpace aug1(const Ring& r) { return augment(ModuleSpace::plain(r, 1, "V")); }

TensorElement theta_product(const std::vector<RepHom>& tuple) {
  std::vector<ModuleElement> labels;
  for (const auto& g : tuple) labels.push_back(theta(g));
  return TensorElement::pure(labels);
}

}  // namespace

TEST_CASE("three-leaf expansion follows the arities of the figure") {
  GeneratingTree sigma = parseTreeFixture(oracle::read_fixture("figure1.tree")).tree;
  // Preorder basis indices of the positions in the fixture.
  const ModuleSpace& A = sigma.space();
  auto e = [&](std::size_t k) { return ModuleElement::basis(A, k); };
  enum { root, L1, L1L1, L1R1, L2, L2L1, L2L2, L2R1, L2R2, R1, R1L1, R1R1, R2, R2L1, R2R1 };
  std::vector<std::vector<ModuleElement>> terms{{e(L1L1), e(L1R1), e(R1)},
                                                {e(L2L1), e(L2R1), e(R2)},
                                                {e(L2L2), e(L2R2), e(R2)}};
  TensorElement want(A.ring, {A, A, A});
  for (const auto& term : terms) want += TensorElement::pure(term);
  TensorElement got = evaluate(RepHom(sigma), parseTree("((* *) *)"));
  CHECK(got == want);
  CHECK(got.terms().size() == 3);
  CHECK(oracle::brute_force_evaluate(sigma, parseTree("((* *) *)")) == want);
}

TEST_CASE("group-like evaluation") {
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  TensorElement v = evaluate(RepHom(g), parseTree("(* *)"));
  CHECK(v.to_string() == "4 * (b1 ⊗ b1) + 2 * (b1 ⊗ k) + 2 * (k ⊗ b1) + 1 * (k ⊗ k)");
  CHECK(evaluate(RepHom(g), dot) == TensorElement::of(g.label()));
}

TEST_CASE("truncated literals fail loudly") {
  GeneratingTree d = parseTreeFixture(oracle::read_fixture("defective.tree")).tree;
  CHECK_NOTHROW(evaluate(RepHom(d), parseTree("(* *)")));
  CHECK_THROWS_AS(evaluate(RepHom(d), parseTree("((* *) *)")), TruncationExceeded);
}

TEST_CASE("delta examples") {
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  auto pairs = delta(RepHom(g));
  REQUIRE(pairs.size() == 1);
  CHECK(equalUpTo(pairs[0].left, RepHom(g), 5));
  CHECK(equalUpTo(pairs[0].right, RepHom(g), 5));

  GeneratingTree z = zeroTree(aug1(Z));
  auto zp = delta(RepHom(z));
  REQUIRE(zp.size() == 1);
  CHECK(equalUpTo(zp[0].left, RepHom(z), 4));
  CHECK(evaluate(zp[0].right, parseTree("(* *)")).is_zero());

  GeneratingTree h = oracle::group_like_tree(Z, 3);
  GeneratingTree s = sumTrees(g, h);
  auto sp = delta(RepHom(s));
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].left.generator().same_node(g.child(Side::L, 1)));
  CHECK(sp[1].right.generator().same_node(h.child(Side::R, 1)));
}

TEST_CASE("epsilon, pi and theta") {
  ModuleSpace A = aug1(Z);
  ModuleSpace V = ModuleSpace::plain(Z, 1, "V");
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  GeneratingTree z = zeroTree(A);
  CHECK(epsilon(RepHom(g)) == Scalar::one(Z));
  CHECK(epsilon(RepHom(z)).is_zero());
  CHECK(pi(RepHom(g)) == ModuleElement::from_ints(V, {2}));
  CHECK(pi(RepHom(z)).is_zero());
  CHECK(theta(RepHom(g)) == ModuleElement::from_ints(A, {2, 1}));
  CHECK(theta(RepHom(z)).is_zero());
  std::mt19937 rng(41);
  for (const Ring& ring : oracle::test_rings()) {
    ModuleSpace A2 = augment(ModuleSpace::plain(ring, 2, "V"));
    for (int i = 0; i < 10; ++i) {
      GeneratingTree s = oracle::random_literal(rng, A2, 2, 2);
      GeneratingTree t = oracle::random_literal(rng, A2, 2, 2);
      Scalar l = oracle::random_scalar(rng, ring);
      RepHom f(s);
      CHECK(theta(f) == embedV(pi(f)) + embedK(A2, epsilon(f)));
      CHECK(epsilon(RepHom(sumTrees(s, t))) == epsilon(f) + epsilon(RepHom(t)));
      CHECK(pi(RepHom(scaleTree(l, s))) == l * pi(f));
    }
  }
}

TEST_CASE("equalUpTo") {
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  CHECK(equalUpTo(RepHom(g), RepHom(g), 5));
  CHECK_FALSE(equalUpTo(RepHom(g), RepHom(zeroTree(aug1(Z))), 1));
  std::mt19937 rng(43);
  GeneratingTree s = oracle::random_literal(rng, aug1(Z), 4, 3);
  CHECK(equalUpTo(RepHom(s), RepHom(oracle::pair_permuted(s, 4)), 4));
  CHECK_THROWS_AS(equalUpTo(RepHom(g), RepHom(g), 40), BoundTooLarge);
}

TEST_CASE("phiEval") {
  ModuleSpace A = aug1(Z);
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  auto pairs = delta(RepHom(g));
  CHECK(phiEval(A, pairs, dot).is_zero());
  for (const auto& t : enumerate(5)) {
    CHECK(phiEval(A, {}, t).is_zero());
    if (!t.is_leaf()) CHECK(phiEval(A, pairs, t) == evaluate(RepHom(g), t));
  }
}

TEST_CASE("split identity and decomposition independence") {
  std::mt19937 rng(47);
  for (const Ring& ring : oracle::test_rings()) {
    ModuleSpace A = augment(ModuleSpace::plain(ring, 1, "V"));
    for (int i = 0; i < 10; ++i) {
      GeneratingTree s = oracle::random_literal(rng, A, 4, 3);
      GeneratingTree p = oracle::pair_permuted(s, 4);
      auto ds = delta(RepHom(s));
      auto dp = delta(RepHom(p));
      for (const auto& t : enumerate(3)) {
        for (const auto& u : enumerate(3)) {
          GradingTree w = join(t, u);
          CHECK(phiEval(A, ds, w) == evaluate(RepHom(s), w));
          CHECK(phiEval(A, ds, w) == phiEval(A, dp, w));
        }
      }
    }
  }
}

TEST_CASE("delta is additive at the level of values") {
  std::mt19937 rng(53);
  for (const Ring& ring : oracle::test_rings()) {
    ModuleSpace A = augment(ModuleSpace::plain(ring, 1, "V"));
    for (int i = 0; i < 5; ++i) {
      GeneratingTree s = oracle::random_literal(rng, A, 4, 2);
      GeneratingTree t = oracle::random_literal(rng, A, 4, 2);
      Scalar l = oracle::random_scalar(rng, ring);
      for (const auto& w : enumerate(4)) {
        CHECK(phiEval(A, delta(RepHom(sumTrees(s, t))), w) ==
              phiEval(A, delta(RepHom(s)), w) + phiEval(A, delta(RepHom(t)), w));
        CHECK(phiEval(A, delta(RepHom(scaleTree(l, s))), w) ==
              l * phiEval(A, delta(RepHom(s)), w));
      }
    }
  }
}

TEST_CASE("iteratedDelta") {
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  RepHom f(g);
  auto one = iteratedDelta(f, 1);
  REQUIRE(one.size() == 1);
  REQUIRE(one[0].size() == 1);
  CHECK(one[0][0].generator().same_node(g));
  auto two = iteratedDelta(f, 2);
  auto d = delta(f);
  REQUIRE(two.size() == d.size());
  CHECK(two[0][0].generator().same_node(d[0].left.generator()));
  CHECK(two[0][1].generator().same_node(d[0].right.generator()));
  auto three = iteratedDelta(f, 3);
  REQUIRE(three.size() == 1);
  REQUIRE(three[0].size() == 3);
  for (const auto& h : three[0]) CHECK(equalUpTo(h, f, 4));
  CHECK_THROWS_AS(iteratedDelta(f, 0), InvalidArity);
  CHECK_THROWS_AS(iteratedDelta(f, -2), InvalidArity);
}

TEST_CASE("theta of the iterated coproduct reproduces the left comb") {
  std::mt19937 rng(59);
  for (const Ring& ring : oracle::test_rings()) {
    ModuleSpace A = augment(ModuleSpace::plain(ring, 2, "V"));
    for (int i = 0; i < 5; ++i) {
      GeneratingTree s = oracle::random_literal(rng, A, 3, 2);
      RepHom f(s);
      for (long long n = 1; n <= 4; ++n) {
        TensorElement sum(ring, std::vector<ModuleSpace>(static_cast<std::size_t>(n), A));
        for (const auto& tuple : iteratedDelta(f, n)) sum += theta_product(tuple);
        CHECK(sum == evaluate(f, leftComb(static_cast<std::size_t>(n))));
      }
    }
  }
}

TEST_CASE("recursive evaluation matches the index-assignment oracle") {
  std::mt19937 rng(61);
  for (const Ring& ring : oracle::test_rings()) {
    ModuleSpace A = augment(ModuleSpace::plain(ring, 1, "V"));
    for (int i = 0; i < 10; ++i) {
      GeneratingTree s = oracle::random_literal(rng, A, 4, 3);
      for (const auto& t : enumerate(4)) {
        CHECK(evaluate(RepHom(s), t) == oracle::brute_force_evaluate(s, t));
      }
    }
  }
}

TEST_CASE("memoized evaluation is stable") {
  auto fx = oracle::load_precoalgebra("random_rank2_zmod4.pre");
  RepHom f(fromPrecoalgebra(fx.coalgebra, fx.phi, ModuleElement::basis(fx.coalgebra.space(), 0)));
  for (const auto& t : enumerate(5)) {
    TensorElement first = evaluate(f, t);
    CHECK(evaluate(f, t) == first);
    CHECK(oracle::brute_force_evaluate(f.generator(), t) == first);
  }
}
