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

// Finite-rank precoalgebras given by structure tables, linear maps between
// free modules, and the line-oriented precoalgebra file format:
//
//   ring Z | ring Zmod n | ring Q
//   rank r
//   delta b<k> = c*(b<l>,b<m>) [+ ...]
//   eps b<k> = c
//   phi b<k> = c1,...,c_rankV
//   rankV r'
//
// Omitted delta/eps/phi lines are zero.

#ifndef COFREE_PRECOALGEBRA_HPP
#define COFREE_PRECOALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cofree/module.hpp"
#include "cofree/scalar.hpp"
#include "cofree/tensor.hpp"

namespace cofree {

// δ′(b_k) = Σ c_{k;l,m} b_l⊗b_m and ε′(b_k). No axioms are assumed.
class FinitePrecoalgebra {
 public:
  // (l, m) -> c_{k;l,m}, 0-based, no zero entries.
  using DeltaRow = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  // All-zero structure on `space`.
  explicit FinitePrecoalgebra(ModuleSpace space);

  const ModuleSpace& space() const { return space_; }
  std::size_t rank() const { return space_.rank; }
  const Ring& ring() const { return space_.ring; }

  const DeltaRow& delta_row(std::size_t k) const { return delta_.at(k); }
  const Scalar& eps(std::size_t k) const { return eps_.at(k); }

  // Accumulates c into c_{k;l,m}.
  void add_delta(std::size_t k, std::size_t l, std::size_t m, const Scalar& c);
  void set_eps(std::size_t k, const Scalar& c);

  // δ′ and ε′ extended linearly.
  TensorElement delta(const ModuleElement& d) const;
  Scalar epsilon(const ModuleElement& d) const;

 private:
  ModuleSpace space_;
  std::vector<DeltaRow> delta_;
  std::vector<Scalar> eps_;
};

class LinearMap {
 public:
  // Zero map.
  LinearMap(ModuleSpace domain, ModuleSpace codomain);
  // rows.size() == codomain.rank, each row of length domain.rank.
  LinearMap(ModuleSpace domain, ModuleSpace codomain, std::vector<std::vector<Scalar>> rows);

  const ModuleSpace& domain() const { return domain_; }
  const ModuleSpace& codomain() const { return codomain_; }
  const Scalar& entry(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }
  void set_entry(std::size_t row, std::size_t col, const Scalar& c);

  // Image of the k-th basis vector (column k).
  ModuleElement column(std::size_t k) const;
  ModuleElement operator()(const ModuleElement& x) const;

  friend LinearMap compose(const LinearMap& g, const LinearMap& f);

 private:
  ModuleSpace domain_;
  ModuleSpace codomain_;
  std::vector<std::vector<Scalar>> rows_;
};

// g∘f.
LinearMap compose(const LinearMap& g, const LinearMap& f);

using SplitPairs = std::vector<std::pair<ModuleElement, ModuleElement>>;

// Fixed representation δ′(d) = Σ_i d_{L(i)}⊗d_{R(i)}: for each nonzero
// coordinate c_k of d and each nonzero entry (l, m) of row k in
// lexicographic order, the pair (c_k·c_{k;l,m}·b_l, b_m). An empty list is
// padded to [(0, 0)].
SplitPairs canonicalSplit(const FinitePrecoalgebra& P, const ModuleElement& d);

// A precoalgebra file together with its map φ : D -> V.
struct PrecoalgebraFixture {
  FinitePrecoalgebra coalgebra;
  LinearMap phi;
};

// Throws SyntaxError (with the byte offset of the offending line) and
// SpaceMismatch for dimension errors. `ring_override` replaces the file's
// ring line.
PrecoalgebraFixture parsePrecoalgebra(std::string_view text,
                                      std::optional<Ring> ring_override = std::nullopt);
std::string formatPrecoalgebra(const PrecoalgebraFixture& fixture);

}  // namespace cofree

#endif  // COFREE_PRECOALGEBRA_HPP
