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

#include "cofree/tensor.hpp"

#include <ostream>

#include "cofree/error.hpp"

namespace cofree {

namespace {

void require_same_shape(const TensorElement& a, const TensorElement& b) {
  if (!(a.ring() == b.ring())) {
    throw MixedRings("tensors over " + a.ring().to_string() + " and " + b.ring().to_string());
  }
  if (a.factors() != b.factors()) {
    throw SpaceMismatch("tensors with different factor lists (arity " +
                        std::to_string(a.arity()) + " and " + std::to_string(b.arity()) + ")");
  }
}

std::string factor_name(const ModuleSpace& space, std::uint32_t index) {
  if (space.is_unit()) return "k";
  if (space.is_augmented() && index + 1 == space.rank) return "k";
  return "b" + std::to_string(index + 1);
}

}  // namespace

TensorElement::TensorElement(Ring ring, std::vector<ModuleSpace> factors)
    : ring_(ring), factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (!(f.ring == ring_)) throw MixedRings("factor " + f.tag + " over a different ring");
  }
}

TensorElement TensorElement::scalar(const Scalar& value) {
  TensorElement t(value.ring(), {});
  t.add_term({}, value);
  return t;
}

TensorElement TensorElement::of(const ModuleElement& x) {
  TensorElement t(x.ring(), {x.space()});
  for (std::uint32_t i = 0; i < x.coords().size(); ++i) t.add_term({i}, x[i]);
  return t;
}

TensorElement TensorElement::pure(std::span<const ModuleElement> xs) {
  if (xs.empty()) throw ArityMismatch("pure tensor of no factors needs a ring");
  TensorElement acc = of(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) acc = tensorJoin(acc, of(xs[i]));
  return acc;
}

Scalar TensorElement::coefficient(const Index& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void TensorElement::add_term(const Index& index, const Scalar& c) {
  if (index.size() != factors_.size()) {
    throw ArityMismatch("index of arity " + std::to_string(index.size()) + " for a tensor of arity " +
                        std::to_string(factors_.size()));
  }
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= factors_[k].rank) {
      throw SpaceMismatch("basis index out of range in factor " + std::to_string(k + 1));
    }
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    if (index.empty()) continue;
    out += " * (";
    for (std::size_t k = 0; k < index.size(); ++k) {
      if (k) out += " ⊗ ";
      out += factor_name(factors_[k], index[k]);
    }
    out += ")";
  }
  return out;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  out += b;
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& b) {
  require_same_shape(*this, b);
  for (const auto& [index, c] : b.terms_) add_term(index, c);
  return *this;
}

TensorElement operator*(const Scalar& lambda, const TensorElement& a) {
  if (!(lambda.ring() == a.ring_)) throw MixedRings("scalar and tensor over different rings");
  TensorElement out(a.ring_, a.factors_);
  for (const auto& [index, c] : a.terms_) {
    Scalar p = lambda * c;
    if (!p.is_zero()) out.terms_.emplace(index, std::move(p));
  }
  return out;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  require_same_shape(a, b);
  return a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const TensorElement& x) { return os << x.to_string(); }

TensorElement tensorJoin(const TensorElement& a, const TensorElement& b) {
  if (!(a.ring() == b.ring())) {
    throw MixedRings("join of tensors over " + a.ring().to_string() + " and " +
                     b.ring().to_string());
  }
  std::vector<ModuleSpace> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  TensorElement out(a.ring(), std::move(factors));
  TensorElement::Index index;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      index.assign(ia.begin(), ia.end());
      index.insert(index.end(), ib.begin(), ib.end());
      out.add_term(index, ca * cb);
    }
  }
  return out;
}

TensorElement applyFactorwise(const TensorElement& x, std::span<const Projection> maps) {
  if (maps.size() != x.arity()) {
    throw ArityMismatch(std::to_string(maps.size()) + " maps for a tensor of arity " +
                        std::to_string(x.arity()));
  }
  std::vector<ModuleSpace> factors;
  factors.reserve(maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const ModuleSpace& f = x.factors()[k];
    if (maps[k] != Projection::Id && !f.is_augmented()) {
      throw SpaceMismatch("projection applied to non-augmented factor " + std::to_string(k + 1));
    }
    switch (maps[k]) {
      case Projection::Id:
        factors.push_back(f);
        break;
      case Projection::V:
        factors.push_back(base_of(f));
        break;
      case Projection::K:
        factors.push_back(ModuleSpace::unit(f.ring));
        break;
    }
  }
  TensorElement out(x.ring(), std::move(factors));
  for (const auto& [index, c] : x.terms()) {
    TensorElement::Index mapped(index.size());
    bool survives = true;
    for (std::size_t k = 0; k < index.size() && survives; ++k) {
      const bool on_k = x.factors()[k].is_augmented() && index[k] + 1 == x.factors()[k].rank;
      switch (maps[k]) {
        case Projection::Id:
          mapped[k] = index[k];
          break;
        case Projection::V:
          survives = !on_k;
          mapped[k] = index[k];
          break;
        case Projection::K:
          survives = on_k;
          mapped[k] = 0;
          break;
      }
    }
    if (survives) out.add_term(mapped, c);
  }
  return out;
}

TensorElement dropUnitFactors(const TensorElement& x) {
  std::vector<ModuleSpace> factors;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < x.arity(); ++k) {
    if (!x.factors()[k].is_unit()) {
      factors.push_back(x.factors()[k]);
      kept.push_back(k);
    }
  }
  TensorElement out(x.ring(), std::move(factors));
  for (const auto& [index, c] : x.terms()) {
    TensorElement::Index reduced;
    reduced.reserve(kept.size());
    for (std::size_t k : kept) reduced.push_back(index[k]);
    out.add_term(reduced, c);
  }
  return out;
}

}  // namespace cofree
