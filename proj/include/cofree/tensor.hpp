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

#ifndef COFREE_TENSOR_HPP
#define COFREE_TENSOR_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cofree/module.hpp"
#include "cofree/scalar.hpp"

namespace cofree {

// Per-factor maps on V⊕K. The declaration order is the enumeration order
// used for projection tuples.
enum class Projection { K, V, Id };

// Sparse element of M1⊗...⊗Mn over free modules. Terms are keyed by 0-based
// basis index tuples and never hold a zero coefficient. A tensor with no
// factors is a scalar.
class TensorElement {
 public:
  using Index = std::vector<std::uint32_t>;
  using Terms = std::map<Index, Scalar>;

  // The zero tensor of the given shape.
  TensorElement(Ring ring, std::vector<ModuleSpace> factors);

  static TensorElement scalar(const Scalar& value);
  static TensorElement of(const ModuleElement& x);
  // x1⊗...⊗xn.
  static TensorElement pure(std::span<const ModuleElement> xs);

  const Ring& ring() const { return ring_; }
  const std::vector<ModuleSpace>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of a basis tuple (zero when absent).
  Scalar coefficient(const Index& index) const;

  // Accumulates c into the coefficient of `index`, keeping the sparse form
  // canonical. Meant for building values.
  void add_term(const Index& index, const Scalar& c);

  // "4 * (b1 ⊗ b1) + 2 * (b1 ⊗ k)"; the K coordinate of V⊕K prints as k.
  // The zero tensor prints as "0" and a scalar tensor as its coefficient.
  std::string to_string() const;

  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  TensorElement& operator+=(const TensorElement& b);
  friend TensorElement operator*(const Scalar& lambda, const TensorElement& a);
  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  Ring ring_;
  std::vector<ModuleSpace> factors_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TensorElement& x);

// a⋈b: concatenation of factor lists, coefficients multiplied.
TensorElement tensorJoin(const TensorElement& a, const TensorElement& b);

// Applies one projection per factor. PrV and PrK require an augmented
// factor; a PrK factor becomes the rank-1 unit factor K.
TensorElement applyFactorwise(const TensorElement& x, std::span<const Projection> maps);

// Removes unit factors; valid when every factor is plain or unit.
TensorElement dropUnitFactors(const TensorElement& x);

}  // namespace cofree

#endif  // COFREE_TENSOR_HPP
