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

#include "cofree/module.hpp"

#include <ostream>

#include "cofree/error.hpp"

namespace cofree {

namespace {

constexpr std::string_view kAugmentSuffix = "+K";

void require_same_space(const ModuleElement& x, const ModuleElement& y) {
  if (!(x.space() == y.space())) {
    throw SpaceMismatch("elements of " + x.space().tag + " and " + y.space().tag);
  }
}

}  // namespace

ModuleSpace augment(const ModuleSpace& base) {
  if (base.kind != SpaceKind::Plain) {
    throw SpaceMismatch("cannot augment " + base.tag);
  }
  return ModuleSpace{base.ring, base.rank + 1, base.tag + std::string(kAugmentSuffix),
                     SpaceKind::Augmented};
}

ModuleSpace base_of(const ModuleSpace& augmented) {
  if (!augmented.is_augmented()) {
    throw SpaceMismatch(augmented.tag + " is not of the form V+K");
  }
  std::string tag = augmented.tag.substr(0, augmented.tag.size() - kAugmentSuffix.size());
  return ModuleSpace::plain(augmented.ring, augmented.rank - 1, std::move(tag));
}

ModuleElement::ModuleElement(ModuleSpace space)
    : space_(std::move(space)), coords_(space_.rank, Scalar::zero(space_.ring)) {}

ModuleElement::ModuleElement(ModuleSpace space, std::vector<Scalar> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_.rank) {
    throw SpaceMismatch("expected " + std::to_string(space_.rank) + " coordinates for " +
                        space_.tag + ", got " + std::to_string(coords_.size()));
  }
  for (const auto& c : coords_) {
    if (!(c.ring() == space_.ring)) {
      throw MixedRings("coordinate over " + c.ring().to_string() + " in a space over " +
                       space_.ring.to_string());
    }
  }
}

ModuleElement ModuleElement::basis(const ModuleSpace& space, std::size_t index) {
  if (index >= space.rank) {
    throw SpaceMismatch("basis index " + std::to_string(index + 1) + " exceeds rank of " +
                        space.tag);
  }
  ModuleElement e(space);
  e.coords_[index] = Scalar::one(space.ring);
  return e;
}

ModuleElement ModuleElement::from_ints(const ModuleSpace& space,
                                       const std::vector<long long>& values) {
  std::vector<Scalar> coords;
  coords.reserve(values.size());
  for (long long v : values) coords.push_back(Scalar::of(space.ring, v));
  return ModuleElement(space, std::move(coords));
}

bool ModuleElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string ModuleElement::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].to_string();
  }
  return out;
}

std::string ModuleElement::to_string() const { return "(" + to_csv() + ")"; }

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  require_same_space(a, b);
  return a.coords_ == b.coords_;
}

std::ostream& operator<<(std::ostream& os, const ModuleElement& x) { return os << x.to_string(); }

ModuleElement elemAdd(const ModuleElement& x, const ModuleElement& y) {
  require_same_space(x, y);
  std::vector<Scalar> coords;
  coords.reserve(x.coords().size());
  for (std::size_t i = 0; i < x.coords().size(); ++i) coords.push_back(x[i] + y[i]);
  return ModuleElement(x.space(), std::move(coords));
}

ModuleElement elemScale(const Scalar& lambda, const ModuleElement& x) {
  if (!(lambda.ring() == x.ring())) {
    throw MixedRings("scalar over " + lambda.ring().to_string() + " applied to " +
                     x.space().tag);
  }
  std::vector<Scalar> coords;
  coords.reserve(x.coords().size());
  for (const auto& c : x.coords()) coords.push_back(lambda * c);
  return ModuleElement(x.space(), std::move(coords));
}

ModuleElement elemNeg(const ModuleElement& x) { return elemScale(-Scalar::one(x.ring()), x); }

ModuleElement prV(const ModuleElement& x) {
  ModuleSpace base = base_of(x.space());
  std::vector<Scalar> coords(x.coords().begin(), x.coords().end() - 1);
  return ModuleElement(std::move(base), std::move(coords));
}

Scalar prK(const ModuleElement& x) {
  if (!x.space().is_augmented()) {
    throw SpaceMismatch(x.space().tag + " is not of the form V+K");
  }
  return x.coords().back();
}

ModuleElement embedV(const ModuleElement& v) {
  std::vector<Scalar> coords = v.coords();
  coords.push_back(Scalar::zero(v.ring()));
  return ModuleElement(augment(v.space()), std::move(coords));
}

ModuleElement embedK(const ModuleSpace& augmented, const Scalar& lambda) {
  if (!augmented.is_augmented()) {
    throw SpaceMismatch(augmented.tag + " is not of the form V+K");
  }
  if (!(lambda.ring() == augmented.ring)) {
    throw MixedRings("scalar over " + lambda.ring().to_string() + " embedded into " +
                     augmented.tag);
  }
  ModuleElement x(augmented);
  std::vector<Scalar> coords = x.coords();
  coords.back() = lambda;
  return ModuleElement(augmented, std::move(coords));
}

}  // namespace cofree
