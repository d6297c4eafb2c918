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

#include <thread>

#include "cofree/error.hpp"
#include "cofree/generating_tree.hpp"
#include "cofree/normality.hpp"
#include "cofree/rep_hom.hpp"
#include "oracle.hpp"

using namespace cofree;

namespace {

const Ring Z = Ring::integers();

ModuleSpace aug1(const Ring& r) { return augment(ModuleSpace::plain(r, 1, "V")); }

ModuleElement lab(const ModuleSpace& A, std::vector<long long> v) {
  return ModuleElement::from_ints(A, v);
}

PositionSequence pos(const char* text) { return parsePosition(text); }

}  // namespace

TEST_CASE("positions format and parse") {
  PositionSequence s{{Side::L, 1}, {Side::R, 2}};
  CHECK(formatPosition(s) == "L(1)R(2)");
  CHECK(parsePosition("L(1)R(2)") == s);
  CHECK(formatPosition({}) == "ε");
  CHECK(parsePosition("ε").empty());
  CHECK(parsePosition("L(12)") == PositionSequence{{Side::L, 12}});
  CHECK_THROWS_AS(parsePosition("L(0)"), SyntaxError);
  CHECK_THROWS_AS(parsePosition("X(1)"), SyntaxError);
  CHECK_THROWS_AS(parsePosition("L1"), SyntaxError);
}

TEST_CASE("labelAt on the group-like tree") {
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  ModuleSpace A = aug1(Z);
  CHECK(labelAt(g, {}) == lab(A, {2, 1}));
  CHECK(labelAt(g, pos("L(1)R(1)")) == lab(A, {2, 1}));
  CHECK(labelAt(g, pos("R(1)R(1)L(1)R(1)")) == lab(A, {2, 1}));
  CHECK(g.arity() == 1);
  CHECK_THROWS_AS(labelAt(g, pos("L(2)")), InvalidPosition);
  CHECK_THROWS_AS(labelAt(g, pos("L(1)R(2)")), InvalidPosition);
  CHECK_THROWS_AS(g.child(Side::L, 0), InvalidPosition);
}

TEST_CASE("subtreeAt") {
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  CHECK(subtreeAt(g, {}).same_node(g));
  CHECK(equalUpTo(RepHom(subtreeAt(g, pos("L(1)"))), RepHom(g), 5));
  // Group-like elements give a single self-similar node.
  CHECK(subtreeAt(g, pos("L(1)")).same_node(g));
  ModuleSpace A = aug1(Z);
  GeneratingTree lit =
      literalTree("{1,1 children [{2,1 children [{3,0 children []} {4,0 children []}]} "
                  "{5,1 children [{6,0 children []} {7,0 children []}]}]}",
                  A);
  GeneratingTree sub = subtreeAt(lit, pos("L(1)"));
  CHECK(sub.label() == lab(A, {2, 1}));
  CHECK(sub.arity() == 1);
  CHECK(sub.child(Side::R, 1).label() == lab(A, {4, 0}));
  CHECK(sub.child(Side::R, 1).truncated());
  CHECK(formatLiteral(sub) == "{2,1 children [{3,0 children []} {4,0 children []}]}");
}

TEST_CASE("sumTrees") {
  ModuleSpace A = aug1(Z);
  GeneratingTree a = oracle::group_like_tree(Z, 1);
  GeneratingTree b = oracle::group_like_tree(Z, 2);
  GeneratingTree s = sumTrees(a, b);
  CHECK(s.label() == lab(A, {3, 2}));
  CHECK(s.arity() == 2);
  CHECK(labelAt(s, pos("L(2)")) == labelAt(b, pos("L(1)")));
  CHECK(labelAt(s, pos("R(1)")) == labelAt(a, pos("R(1)")));
  CHECK(equalUpTo(RepHom(sumTrees(a, zeroTree(A))), RepHom(a), 5));
  CHECK_THROWS_AS(sumTrees(a, zeroTree(augment(ModuleSpace::plain(Z, 2, "V")))), SpaceMismatch);
}

TEST_CASE("scaleTree") {
  ModuleSpace A = aug1(Z);
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  GeneratingTree z = scaleTree(Scalar::zero(Z), g);
  CHECK(z.label().is_zero());
  CHECK(labelAt(z, pos("L(1)L(1)")).is_zero());
  CHECK(labelAt(z, pos("L(1)R(1)")) == lab(A, {2, 1}));
  GeneratingTree t3 = scaleTree(Scalar::of(Z, 3), g);
  CHECK(t3.label() == lab(A, {6, 3}));
  CHECK(labelAt(t3, pos("R(1)")) == lab(A, {2, 1}));
  CHECK(labelAt(t3, pos("L(1)")) == lab(A, {6, 3}));
  CHECK(labelAt(t3, pos("R(1)L(1)")) == lab(A, {2, 1}));
  CHECK(equalUpTo(RepHom(scaleTree(Scalar::one(Z), g)), RepHom(g), 5));
  CHECK_THROWS_AS(scaleTree(Scalar::one(Ring::rationals()), g), MixedRings);
}

TEST_CASE("fromPrecoalgebra examples") {
  ModuleSpace A = aug1(Z);
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  for (const char* p : {"ε", "L(1)", "R(1)", "L(1)R(1)", "R(1)L(1)L(1)"}) {
    CHECK(labelAt(g, pos(p)) == lab(A, {2, 1}));
    CHECK(subtreeAt(g, pos(p)).arity() == 1);
  }
  auto fx = oracle::group_like(Z, Scalar::of(Z, 2));
  GeneratingTree zero = fromPrecoalgebra(fx.coalgebra, fx.phi, ModuleElement(fx.coalgebra.space()));
  for (const char* p : {"ε", "L(1)", "R(1)L(1)"}) {
    CHECK(labelAt(zero, pos(p)).is_zero());
    CHECK(subtreeAt(zero, pos(p)).arity() == 1);
  }

  auto nc = oracle::load_precoalgebra("p_nc.pre");
  GeneratingTree s = fromPrecoalgebra(nc.coalgebra, nc.phi,
                                      ModuleElement::basis(nc.coalgebra.space(), 0));
  CHECK(s.label() == lab(A, {1, 1}));
  CHECK(s.arity() == 1);
  CHECK(s.child(Side::L, 1).same_node(s));
  GeneratingTree r = s.child(Side::R, 1);
  CHECK(r.label() == lab(A, {0, 0}));
  CHECK(r.arity() == 1);
  CHECK(r.child(Side::L, 1).label().is_zero());
  CHECK_THROWS_AS(fromPrecoalgebra(nc.coalgebra, nc.phi, ModuleElement::basis(
                                                             fx.coalgebra.space(), 0)),
                  SpaceMismatch);
}

TEST_CASE("literal trees") {
  ModuleSpace A = augment(ModuleSpace::plain(Z, 15, "V"));
  GeneratingTree fig = parseTreeFixture(oracle::read_fixture("figure1.tree")).tree;
  CHECK(fig.arity() == 2);
  CHECK(subtreeAt(fig, pos("L(1)")).arity() == 1);
  CHECK(subtreeAt(fig, pos("L(2)")).arity() == 2);
  CHECK(subtreeAt(fig, pos("R(1)")).arity() == 1);
  CHECK(subtreeAt(fig, pos("R(2)")).arity() == 1);
  CHECK_THROWS_AS(subtreeAt(fig, pos("L(1)L(1)")).arity(), TruncationExceeded);
  try {
    (void)subtreeAt(fig, pos("L(2)R(1)L(1)"));
    FAIL("expected truncation");
  } catch (const TruncationExceeded& e) {
    CHECK(std::string(e.what()).find("L(2)R(1)") != std::string::npos);
  }

  ModuleSpace A1 = aug1(Z);
  CHECK_THROWS_AS(literalTree("{1,1 children [{1,1 children []} {1,1 children []} "
                              "{1,1 children []}]}",
                              A1),
                  OddChildCount);
  CHECK_THROWS_AS(makeNode(lab(A1, {1, 1}), {zeroTree(A1)}), OddChildCount);
  CHECK_THROWS_AS(literalTree("{1,1 children [}", A1), SyntaxError);
  CHECK_THROWS_AS(literalTree("{1 children []}", A1), SyntaxError);
  CHECK_THROWS_AS(literalTree("{1,1 children []} x", A1), SyntaxError);
  CHECK_THROWS_AS(literalTree("{1,1 kids []}", A1), SyntaxError);
}

TEST_CASE("literal round trip is bit-exact") {
  std::mt19937 rng(17);
  for (const Ring& ring : oracle::test_rings()) {
    ModuleSpace A = augment(ModuleSpace::plain(ring, 2, "V"));
    for (int i = 0; i < 20; ++i) {
      GeneratingTree t = oracle::random_literal(rng, A, 3, 3);
      std::string text = formatLiteral(t);
      CHECK(formatLiteral(literalTree(text, A)) == text);
    }
  }
  std::string fixture = oracle::read_fixture("defective.tree");
  std::string body = fixture.substr(fixture.find("tree ") + 5);
  body.pop_back();
  CHECK(formatLiteral(parseTreeFixture(fixture).tree) == body);
}

TEST_CASE("formatLiteral cuts infinite trees at the requested depth") {
  GeneratingTree g = oracle::group_like_tree(Z, 2);
  CHECK(formatLiteral(g, 1) ==
        "{2,1 children [{2,1 children []} {2,1 children []}]}");
  CHECK_THROWS_AS(formatLiteral(g), BoundTooLarge);
}

TEST_CASE("zero tree evaluates to zero") {
  GeneratingTree z = zeroTree(aug1(Ring::rationals()));
  CHECK(z.arity() == 1);
  CHECK(z.child(Side::L, 1).same_node(z));
  for (const auto& t : enumerate(5)) CHECK(evaluate(RepHom(z), t).is_zero());
  CHECK_THROWS_AS(zeroTree(ModuleSpace::plain(Z, 1, "V")), SpaceMismatch);
}

TEST_CASE("tree fixtures") {
  TreeFixture z = parseTreeFixture(oracle::read_fixture("zero.tree"));
  CHECK(z.base.rank == 1);
  CHECK(z.tree.label().is_zero());
  TreeFixture q = parseTreeFixture(oracle::read_fixture("zero.tree"), Ring::rationals());
  CHECK(q.base.ring == Ring::rationals());
  CHECK_THROWS_AS(parseTreeFixture(oracle::read_fixture("bad_odd_children.tree")), OddChildCount);
  CHECK_THROWS_AS(parseTreeFixture(oracle::read_fixture("bad_ring.tree")), SyntaxError);
  CHECK_THROWS_AS(parseTreeFixture("ring Z\ntree zero\n"), SyntaxError);
  CHECK_THROWS_AS(parseTreeFixture("ring Z\nrankV 1\n"), SyntaxError);
}

TEST_CASE("sum and scale generate sum and scaled homomorphisms") {
  std::mt19937 rng(29);
  for (const Ring& ring : oracle::test_rings()) {
    ModuleSpace A = augment(ModuleSpace::plain(ring, 1, "V"));
    for (int i = 0; i < 10; ++i) {
      GeneratingTree s = oracle::random_literal(rng, A, 4, 2);
      GeneratingTree u = oracle::random_literal(rng, A, 4, 2);
      Scalar l = oracle::random_scalar(rng, ring);
      for (const auto& t : enumerate(5)) {
        CHECK(evaluate(RepHom(sumTrees(s, u)), t) ==
              evaluate(RepHom(s), t) + evaluate(RepHom(u), t));
        CHECK(evaluate(RepHom(scaleTree(l, s)), t) == l * evaluate(RepHom(s), t));
      }
    }
  }
}

TEST_CASE("projected sums and scalings follow the case splits") {
  std::mt19937 rng(31);
  ModuleSpace A = augment(ModuleSpace::plain(Z, 1, "V"));
  GeneratingTree s = oracle::random_literal(rng, A, 5, 2);
  GeneratingTree u = oracle::random_literal(rng, A, 5, 2);
  Scalar l = Scalar::of(Z, 3);
  GeneratingTree sum = sumTrees(s, u);
  GeneratingTree scaled = scaleTree(l, s);
  std::size_t m = s.arity();
  std::vector<PositionSequence> positions{{}};
  for (Side a : {Side::L, Side::R}) {
    for (std::size_t i = 1; i <= sum.arity(); ++i) {
      positions.push_back({{a, i}});
      for (Side b : {Side::L, Side::R}) positions.push_back({{a, i}, {b, 1}});
    }
  }
  for (const auto& p : positions) {
    for (const auto& t : enumerate(3)) {
      for (const auto& alpha : plainTuples(t.leaf_count())) {
        TensorElement got = evalProjected(subtreeAt(sum, p), t, alpha);
        TensorElement want = p.empty() ? evalProjected(s, t, alpha) + evalProjected(u, t, alpha)
                             : p[0].index <= m
                                 ? evalProjected(subtreeAt(s, p), t, alpha)
                                 : [&] {
                                     PositionSequence q = p;
                                     q[0].index -= m;
                                     return evalProjected(subtreeAt(u, q), t, alpha);
                                   }();
        CHECK(got == want);
        if (p.size() <= 2 && (p.empty() || p[0].index <= m)) {
          bool all_left = true;
          for (const auto& sym : p) all_left = all_left && sym.side == Side::L;
          TensorElement base = evalProjected(subtreeAt(s, p), t, alpha);
          CHECK(evalProjected(subtreeAt(scaled, p), t, alpha) == (all_left ? l * base : base));
        }
      }
    }
  }
}

TEST_CASE("observation is deterministic under concurrency") {
  auto fx = oracle::load_precoalgebra("divided_power_q.pre");
  GeneratingTree sigma = fromPrecoalgebra(fx.coalgebra, fx.phi,
                                          ModuleElement::basis(fx.coalgebra.space(), 2));
  auto trees = enumerate(5);
  std::vector<std::vector<std::string>> results(4);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < results.size(); ++w) {
    workers.emplace_back([&, w] {
      for (const auto& t : trees) results[w].push_back(evaluate(RepHom(sigma), t).to_string());
    });
  }
  for (auto& th : workers) th.join();
  for (std::size_t w = 1; w < results.size(); ++w) CHECK(results[w] == results[0]);
  CHECK(labelAt(sigma, pos("L(2)R(1)")) == labelAt(sigma, pos("L(2)R(1)")));
  CHECK(subtreeAt(sigma, pos("L(1)")).same_node(subtreeAt(sigma, pos("L(1)"))));
}
