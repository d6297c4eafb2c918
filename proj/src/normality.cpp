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

#include "cofree/normality.hpp"

#include <deque>
#include <map>
#include <set>
#include <utility>

#include "cofree/error.hpp"
#include "cofree/rep_hom.hpp"

namespace cofree {

namespace {

char projection_char(Projection p) {
  switch (p) {
    case Projection::K:
      return 'K';
    case Projection::V:
      return 'V';
    case Projection::Id:
      break;
  }
  return 'I';
}

std::vector<ProjectionTuple> all_tuples(std::size_t n, std::vector<Projection> alphabet) {
  std::vector<ProjectionTuple> out{ProjectionTuple{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<ProjectionTuple> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& prefix : out) {
      for (Projection p : alphabet) {
        ProjectionTuple t = prefix;
        t.push_back(p);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

void require_bound(std::size_t maxLeaves) {
  if (maxLeaves < 1) throw InvalidArity("leaf bound must be at least 1");
}

// Total number of (tree, tuple) observations with `base` choices per leaf.
void require_sweep_size(std::size_t maxLeaves, unsigned long long base) {
  unsigned long long total = 0;
  unsigned long long power = 1;
  for (std::size_t n = 1; n <= maxLeaves; ++n) {
    power *= base;
    unsigned long long c = countWithLeaves(n);
    if (c > kDefaultEnumerationCap || power > kDefaultEnumerationCap ||
        c * power > kDefaultEnumerationCap) {
      total = kDefaultEnumerationCap + 1;
      break;
    }
    total += c * power;
  }
  if (total > kDefaultEnumerationCap) {
    throw BoundTooLarge("sweep over trees with up to " + std::to_string(maxLeaves) +
                        " leaves exceeds cap " + std::to_string(kDefaultEnumerationCap));
  }
}

ProjectionTuple repeated(Projection p, std::size_t n) { return ProjectionTuple(n, p); }

NormalityReport make_report(std::string check, std::size_t maxLeaves,
                            std::optional<std::size_t> maxDepth = std::nullopt) {
  NormalityReport r;
  r.check = std::move(check);
  r.max_leaves = maxLeaves;
  r.max_depth = maxDepth;
  return r;
}

void fail(NormalityReport& report, NormalityWitness witness) {
  report.passed = false;
  report.witness = std::move(witness);
}

// Compares every observation against the first one with the same key.
template <typename KeyFn>
std::optional<NormalityWitness> sweep(const GeneratingTree& sigma, std::size_t maxLeaves,
                                      const std::vector<Projection>& alphabet, KeyFn key) {
  RepHom f(sigma);
  std::map<std::string, Observation> first_seen;
  for (const GradingTree& t : enumerate(maxLeaves)) {
    TensorElement value = evaluate(f, t);
    for (const ProjectionTuple& alpha : all_tuples(t.leaf_count(), alphabet)) {
      TensorElement projected = dropUnitFactors(applyFactorwise(value, alpha));
      auto [it, inserted] = first_seen.try_emplace(key(alpha), Observation{t, alpha, projected});
      if (!inserted && !(it->second.value == projected)) {
        return NormalityWitness{{}, it->second, Observation{t, alpha, projected}, ""};
      }
    }
  }
  return std::nullopt;
}

std::optional<NormalityWitness> weak_witness(const GeneratingTree& sigma, std::size_t maxLeaves) {
  return sweep(sigma, maxLeaves, {Projection::K, Projection::V},
               [](const ProjectionTuple& a) { return std::to_string(pdeg(a)); });
}

ModuleSpace augmented_of(const GeneratingTree& sigma) { return sigma.space(); }

}  // namespace

std::string formatTuple(const ProjectionTuple& alpha) {
  std::string out;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (k) out += ',';
    out += projection_char(alpha[k]);
  }
  return out;
}

ProjectionTuple parseTuple(std::string_view text) {
  ProjectionTuple out;
  if (text.empty()) return out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (k % 2 == 1) {
      if (text[k] != ',') throw SyntaxError("expected ','", k);
      continue;
    }
    switch (text[k]) {
      case 'K':
        out.push_back(Projection::K);
        break;
      case 'V':
        out.push_back(Projection::V);
        break;
      case 'I':
        out.push_back(Projection::Id);
        break;
      default:
        throw SyntaxError("expected K, V or I", k);
    }
  }
  if (text.size() % 2 == 0) throw SyntaxError("trailing ','", text.size() - 1);
  return out;
}

bool isPlain(const ProjectionTuple& alpha) {
  for (Projection p : alpha) {
    if (p == Projection::Id) return false;
  }
  return true;
}

std::size_t pdeg(const ProjectionTuple& alpha) {
  if (!isPlain(alpha)) throw NotPlain("pdeg of generalized tuple " + formatTuple(alpha));
  std::size_t a = 0;
  for (Projection p : alpha) a += p == Projection::V ? 1 : 0;
  return a;
}

ProjectionTuple pcan(const ProjectionTuple& alpha) {
  ProjectionTuple out;
  for (Projection p : alpha) {
    if (p != Projection::K) out.push_back(p);
  }
  return out;
}

std::vector<ProjectionTuple> plainTuples(std::size_t n) {
  return all_tuples(n, {Projection::K, Projection::V});
}

std::vector<ProjectionTuple> generalizedTuples(std::size_t n) {
  return all_tuples(n, {Projection::K, Projection::V, Projection::Id});
}

TensorElement evalProjected(const GeneratingTree& sigma, const GradingTree& t,
                            const ProjectionTuple& alpha) {
  if (alpha.size() != t.leaf_count()) {
    throw ArityMismatch("tuple " + formatTuple(alpha) + " for a tree with " +
                        std::to_string(t.leaf_count()) + " leaves");
  }
  return dropUnitFactors(applyFactorwise(evaluate(RepHom(sigma), t), alpha));
}

NormalityReport isWeaklyNormalUpTo(const GeneratingTree& sigma, std::size_t maxLeaves) {
  require_bound(maxLeaves);
  require_sweep_size(maxLeaves, 2);
  NormalityReport report = make_report("weak-normality", maxLeaves);
  if (auto w = weak_witness(sigma, maxLeaves)) fail(report, std::move(*w));
  return report;
}

NormalityReport isNormalUpTo(const GeneratingTree& sigma, std::size_t maxLeaves,
                             std::size_t maxDepth) {
  require_bound(maxLeaves);
  require_sweep_size(maxLeaves, 2);
  NormalityReport report = make_report("normality", maxLeaves, maxDepth);
  std::set<const detail::GenNode*> visited;
  std::deque<std::pair<PositionSequence, GeneratingTree>> queue;
  queue.emplace_back(PositionSequence{}, sigma);
  while (!queue.empty()) {
    auto [s, tree] = std::move(queue.front());
    queue.pop_front();
    if (!visited.insert(&tree.node()).second) continue;
    if (auto w = weak_witness(tree, maxLeaves)) {
      w->position = s;
      fail(report, std::move(*w));
      return report;
    }
    if (s.size() >= maxDepth) continue;
    std::size_t n = tree.arity();
    for (Side side : {Side::L, Side::R}) {
      for (std::size_t i = 1; i <= n; ++i) {
        PositionSequence next = s;
        next.push_back(PositionSymbol{side, i});
        queue.emplace_back(std::move(next), tree.child(side, i));
      }
    }
  }
  return report;
}

NormalityReport checkGeneralizedNonproj(const GeneratingTree& sigma, std::size_t maxLeaves) {
  require_bound(maxLeaves);
  require_sweep_size(maxLeaves, 3);
  NormalityReport report = make_report("generalized-nonprojection", maxLeaves);
  auto w = sweep(sigma, maxLeaves, {Projection::K, Projection::V, Projection::Id},
                 [](const ProjectionTuple& a) { return formatTuple(pcan(a)); });
  if (w) fail(report, std::move(*w));
  return report;
}

NormalityReport checkCoassociativityUpTo(const GeneratingTree& sigma, std::size_t maxLeaves) {
  require_bound(maxLeaves);
  NormalityReport report = make_report("coassociativity", maxLeaves);
  RepHom f(sigma);
  std::vector<GradingTree> trees = enumerate(maxLeaves);
  for (const GradingTree& t : trees) {
    for (const GradingTree& u : trees) {
      for (const GradingTree& v : trees) {
        std::size_t n = t.leaf_count() + u.leaf_count() + v.leaf_count();
        if (n > maxLeaves) continue;
        GradingTree lhs_tree = join(join(t, u), v);
        GradingTree rhs_tree = join(t, join(u, v));
        TensorElement lhs = evaluate(f, lhs_tree);
        TensorElement rhs = evaluate(f, rhs_tree);
        if (!(lhs == rhs)) {
          ProjectionTuple ids = repeated(Projection::Id, n);
          fail(report, NormalityWitness{{},
                                        Observation{lhs_tree, ids, lhs},
                                        Observation{rhs_tree, ids, rhs},
                                        "t = " + t.text() + ", u = " + u.text() +
                                            ", v = " + v.text()});
          return report;
        }
      }
    }
  }
  return report;
}

NormalityReport checkCounitalityUpTo(const GeneratingTree& sigma, std::size_t maxLeaves) {
  require_bound(maxLeaves);
  NormalityReport report = make_report("counitality", maxLeaves);
  RepHom f(sigma);
  const GradingTree dot = GradingTree::leaf();
  for (const GradingTree& t : enumerate(maxLeaves)) {
    std::size_t n = t.leaf_count();
    ProjectionTuple ids = repeated(Projection::Id, n);
    TensorElement value = evaluate(f, t);
    ProjectionTuple left_tuple = ids;
    left_tuple.insert(left_tuple.begin(), Projection::K);
    ProjectionTuple right_tuple = ids;
    right_tuple.push_back(Projection::K);
    std::pair<GradingTree, ProjectionTuple> sides[] = {{join(dot, t), left_tuple},
                                                       {join(t, dot), right_tuple}};
    for (const auto& [tree, tuple] : sides) {
      TensorElement other = evalProjected(sigma, tree, tuple);
      if (!(value == other)) {
        fail(report, NormalityWitness{{}, Observation{t, ids, value},
                                      Observation{tree, tuple, other}, ""});
        return report;
      }
    }
  }
  return report;
}

NormalityReport checkCompositeEqualityUpTo(const GeneratingTree& sigma, std::size_t maxN) {
  require_bound(maxN);
  require_sweep_size(maxN, 2);
  NormalityReport report = make_report("composite-equality", maxN);
  RepHom f(sigma);
  const ModuleSpace aug = augmented_of(sigma);
  const ModuleSpace base = base_of(aug);
  // π^⊗a(⟦δ⟧^a(f)) for each a that occurs.
  std::vector<std::optional<TensorElement>> composite(maxN + 1);
  auto composite_value = [&](std::size_t a) -> const TensorElement& {
    if (!composite[a]) {
      if (a == 0) {
        composite[a] = TensorElement::scalar(epsilon(f));
      } else {
        TensorElement sum(aug.ring, std::vector<ModuleSpace>(a, base));
        for (const auto& tuple : iteratedDelta(f, static_cast<long long>(a))) {
          std::vector<ModuleElement> factors;
          factors.reserve(a);
          for (const RepHom& g : tuple) factors.push_back(pi(g));
          sum += TensorElement::pure(factors);
        }
        composite[a] = std::move(sum);
      }
    }
    return *composite[a];
  };
  for (std::size_t n = 1; n <= maxN; ++n) {
    GradingTree tn = leftComb(n);
    for (const ProjectionTuple& alpha : plainTuples(n)) {
      std::size_t a = pdeg(alpha);
      TensorElement lhs = evalProjected(sigma, tn, alpha);
      const TensorElement& rhs = composite_value(a);
      if (!(lhs == rhs)) {
        GradingTree ta = a == 0 ? GradingTree::leaf() : leftComb(a);
        ProjectionTuple ref = a == 0 ? ProjectionTuple{Projection::K}
                                     : repeated(Projection::V, a);
        fail(report, NormalityWitness{{}, Observation{tn, alpha, lhs}, Observation{ta, ref, rhs},
                                      "second value is the composite through iterated delta "
                                      "of degree " + std::to_string(a)});
        return report;
      }
    }
  }
  return report;
}

TensorElement sigmaOfN(const GeneratingTree& sigma, long long n) {
  if (n < 0) throw InvalidArity("degree must be nonnegative");
  if (n == 0) return evalProjected(sigma, GradingTree::leaf(), {Projection::K});
  std::size_t m = static_cast<std::size_t>(n);
  return evalProjected(sigma, leftComb(m), repeated(Projection::V, m));
}

std::vector<TensorElement> blFamily(const GeneratingTree& sigma, long long N) {
  if (N < 0) throw InvalidArity("degree bound must be nonnegative");
  std::vector<TensorElement> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (long long n = 0; n <= N; ++n) out.push_back(sigmaOfN(sigma, n));
  return out;
}

namespace {

nlohmann::ordered_json observation_json(const Observation& o) {
  nlohmann::ordered_json j;
  j["tree"] = o.tree.text();
  j["tuple"] = formatTuple(o.tuple);
  j["value"] = o.value.to_string();
  return j;
}

std::string observation_text(const Observation& o) {
  return "tree=" + o.tree.text() + " tuple=" + formatTuple(o.tuple) +
         " value=" + o.value.to_string();
}

}  // namespace

std::string formatReport(const NormalityReport& report) {
  std::string out;
  out += "check: " + report.check + "\n";
  out += "max-leaves: " + std::to_string(report.max_leaves) + "\n";
  if (report.max_depth) out += "max-depth: " + std::to_string(*report.max_depth) + "\n";
  out += std::string("verdict: ") + (report.passed ? "pass" : "fail") + "\n";
  if (report.witness) {
    const NormalityWitness& w = *report.witness;
    out += "witness-position: " + formatPosition(w.position) + "\n";
    out += "witness-first: " + observation_text(w.first) + "\n";
    out += "witness-second: " + observation_text(w.second) + "\n";
    if (!w.note.empty()) out += "witness-note: " + w.note + "\n";
  }
  return out;
}

nlohmann::ordered_json reportJson(const NormalityReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["max-leaves"] = report.max_leaves;
  if (report.max_depth) j["max-depth"] = *report.max_depth;
  j["verdict"] = report.passed ? "pass" : "fail";
  if (report.witness) {
    const NormalityWitness& w = *report.witness;
    nlohmann::ordered_json wj;
    wj["position"] = formatPosition(w.position);
    wj["first"] = observation_json(w.first);
    wj["second"] = observation_json(w.second);
    if (!w.note.empty()) wj["note"] = w.note;
    j["witness"] = std::move(wj);
  }
  return j;
}

}  // namespace cofree
