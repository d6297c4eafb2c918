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

// Finite-rank free modules with an explicit basis, and the augmented
// space V⊕K.

#ifndef COFREE_MODULE_HPP
#define COFREE_MODULE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cofree/scalar.hpp"

namespace cofree {

enum class SpaceKind {
  Plain,      // an arbitrary finite-rank free module
  Augmented,  // V⊕K; the K coordinate is the last one
  Unit,       // K itself, as a rank-1 module
};

struct ModuleSpace {
  Ring ring;
  std::size_t rank = 0;
  std::string tag;
  SpaceKind kind = SpaceKind::Plain;

  static ModuleSpace plain(Ring ring, std::size_t rank, std::string tag) {
    return ModuleSpace{ring, rank, std::move(tag), SpaceKind::Plain};
  }
  static ModuleSpace unit(Ring ring) { return ModuleSpace{ring, 1, "K", SpaceKind::Unit}; }

  bool is_augmented() const { return kind == SpaceKind::Augmented; }
  bool is_unit() const { return kind == SpaceKind::Unit; }

  friend bool operator==(const ModuleSpace&, const ModuleSpace&) = default;
};

// V⊕K presented as a space of rank r+1.
ModuleSpace augment(const ModuleSpace& base);
// Inverse of augment. Throws SpaceMismatch for a non-augmented space.
ModuleSpace base_of(const ModuleSpace& augmented);

class ModuleElement {
 public:
  // The zero vector.
  explicit ModuleElement(ModuleSpace space);
  // Throws SpaceMismatch if the length or rings disagree with `space`.
  ModuleElement(ModuleSpace space, std::vector<Scalar> coords);

  // Basis vector with 0-based index.
  static ModuleElement basis(const ModuleSpace& space, std::size_t index);
  static ModuleElement from_ints(const ModuleSpace& space, const std::vector<long long>& values);

  const ModuleSpace& space() const { return space_; }
  const Ring& ring() const { return space_.ring; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;

  // "(2,1)"; the rank-0 vector prints as "()".
  std::string to_string() const;
  // "2,1" as used in fixture files.
  std::string to_csv() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  ModuleSpace space_;
  std::vector<Scalar> coords_;
};

std::ostream& operator<<(std::ostream& os, const ModuleElement& x);

ModuleElement elemAdd(const ModuleElement& x, const ModuleElement& y);
ModuleElement elemScale(const Scalar& lambda, const ModuleElement& x);
ModuleElement elemNeg(const ModuleElement& x);

inline ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) {
  return elemAdd(x, y);
}
inline ModuleElement operator*(const Scalar& lambda, const ModuleElement& x) {
  return elemScale(lambda, x);
}

ModuleElement prV(const ModuleElement& x);
Scalar prK(const ModuleElement& x);
ModuleElement embedV(const ModuleElement& v);
// `augmented` names the target V⊕K since a bare scalar does not determine V.
ModuleElement embedK(const ModuleSpace& augmented, const Scalar& lambda);

}  // namespace cofree

#endif  // COFREE_MODULE_HPP
