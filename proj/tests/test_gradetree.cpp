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

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "cofree/error.hpp"
#include "cofree/grading_tree.hpp"

using namespace cofree;

namespace {

const GradingTree dot = GradingTree::leaf();

GradingTree random_tree(std::mt19937& rng, std::size_t leaves) {
  if (leaves == 1) return dot;
  std::uniform_int_distribution<std::size_t> split(1, leaves - 1);
  std::size_t l = split(rng);
  return join(random_tree(rng, l), random_tree(rng, leaves - l));
}

// Independent enumeration: all full binary trees by recursive splitting,
// compared as sets of texts.
std::set<std::string> brute_force(std::size_t n) {
  if (n == 1) return {"*"};
  std::set<std::string> out;
  for (std::size_t l = 1; l < n; ++l) {
    for (const auto& a : brute_force(l)) {
      for (const auto& b : brute_force(n - l)) out.insert("(" + a + " " + b + ")");
    }
  }
  return out;
}

bool full_binary(const GradingTree& t) {
  if (t.is_leaf()) return true;
  return full_binary(t.left()) && full_binary(t.right()) &&
         t.leaf_count() == t.left().leaf_count() + t.right().leaf_count();
}

}  // namespace

TEST_CASE("join examples") {
  CHECK(join(dot, dot).text() == "(* *)");
  GradingTree t = join(join(dot, dot), dot);
  CHECK(t.text() == "((* *) *)");
  CHECK(t == parseTree("((* *) *)"));
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int i = 0; i < 100; ++i) {
    GradingTree a = random_tree(rng, size(rng));
    GradingTree b = random_tree(rng, size(rng));
    GradingTree c = join(a, b);
    CHECK(leafCount(c) == leafCount(a) + leafCount(b));
    CHECK(full_binary(c));
    CHECK(c.left() == a);
    CHECK(c.right() == b);
  }
}

TEST_CASE("leafCount examples") {
  CHECK(leafCount(dot) == 1);
  CHECK(leafCount(parseTree("((* *) *)")) == 3);
  GradingTree comb = dot;
  for (std::size_t n = 1; n <= 10; ++n) {
    comb = join(comb, dot);
    CHECK(leafCount(comb) == n + 1);
  }
}

TEST_CASE("enumerate examples") {
  auto one = enumerate(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_leaf());
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 7; ++n) {
    auto level = enumerateWithLeaves(n);
    CHECK(level.size() == catalan[n - 1]);
    CHECK(countWithLeaves(n) == catalan[n - 1]);
    std::set<std::string> got;
    for (const auto& t : level) got.insert(t.text());
    CHECK(got == brute_force(n));
  }
  CHECK(enumerate(3).size() == 4);
  CHECK(enumerate(5).size() == 1 + 1 + 2 + 5 + 14);
}

TEST_CASE("enumeration order is leaf count then text") {
  auto all = enumerate(6);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1];
    const auto& b = all[i];
    CHECK((a.leaf_count() < b.leaf_count() ||
           (a.leaf_count() == b.leaf_count() && a.text() < b.text())));
  }
  auto again = enumerate(6);
  CHECK(std::equal(all.begin(), all.end(), again.begin()));
}

TEST_CASE("enumeration is closed under join") {
  auto all = enumerate(6);
  std::set<std::string> texts;
  for (const auto& t : all) texts.insert(t.text());
  for (const auto& a : all) {
    for (const auto& b : all) {
      bool fits = a.leaf_count() + b.leaf_count() <= 6;
      CHECK(texts.count(join(a, b).text()) == (fits ? 1u : 0u));
    }
  }
  for (const auto& t : all) {
    if (t.is_leaf()) continue;
    CHECK(texts.count(t.left().text()) == 1);
    CHECK(texts.count(t.right().text()) == 1);
  }
}

TEST_CASE("enumeration refuses oversized bounds") {
  CHECK_THROWS_AS(enumerate(30), BoundTooLarge);
  CHECK_THROWS_AS(enumerate(5, 10), BoundTooLarge);
  CHECK_THROWS_AS(enumerate(0), InvalidArity);
}

TEST_CASE("leftComb examples") {
  CHECK(leftComb(1).text() == "*");
  CHECK(leftComb(2).text() == "(* *)");
  CHECK(leftComb(3).text() == "((* *) *)");
  CHECK(leftComb(4).text() == "(((* *) *) *)");
  CHECK_THROWS_AS(leftComb(0), InvalidArity);
}

TEST_CASE("parse and format") {
  CHECK(parseTree("*").is_leaf());
  GradingTree t = parseTree("((* *) *)");
  CHECK(t.left().text() == "(* *)");
  CHECK(t.right().is_leaf());
  for (const auto& s : enumerate(6)) CHECK(formatTree(parseTree(s.text())) == s.text());
  for (const char* bad : {"", "((*)", "(* *", "(**)", "(*  *)", "* ", "(* *))", "x", "( * *)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parseTree(bad), SyntaxError);
  }
  try {
    parseTree("((*)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("leaves examples") {
  CHECK(leaves(dot) == std::vector<std::string>{""});
  CHECK(leaves(parseTree("((* *) *)")) == std::vector<std::string>{"LL", "LR", "R"});
  CHECK(leaves(parseTree("(* (* *))")) == std::vector<std::string>{"L", "RL", "RR"});
  for (const auto& t : enumerate(6)) {
    auto ps = leaves(t);
    CHECK(ps.size() == t.leaf_count());
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
  }
}

TEST_CASE("depth") {
  CHECK(dot.depth() == 0);
  CHECK(leftComb(4).depth() == 3);
  CHECK(parseTree("((* *) (* *))").depth() == 2);
}
