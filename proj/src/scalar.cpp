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

#include "cofree/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "cofree/error.hpp"

namespace cofree {

namespace {

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring())) {
    throw MixedRings("scalars over " + a.ring().to_string() + " and " +
                     b.ring().to_string());
  }
}

BigInt parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw SyntaxError("expected digits", offset + i);
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw SyntaxError("unexpected character '" + std::string(1, text[i]) + "'",
                        offset + i);
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Ring Ring::integers_mod(std::uint64_t modulus) {
  if (modulus < 2) {
    throw InvalidArity("modulus must be at least 2, got " + std::to_string(modulus));
  }
  return Ring(RingKind::IntegersMod, modulus);
}

Ring Ring::parse(std::string_view text) {
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.substr(0, 4) == "Zmod") {
    std::size_t inner = offset + 4;
    std::string_view rest = trim(text.substr(4), inner);
    BigInt n = parse_integer(rest, inner);
    if (n < 2 || n > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      throw SyntaxError("modulus out of range", inner);
    }
    return integers_mod(static_cast<std::uint64_t>(n));
  }
  throw SyntaxError("unknown ring '" + std::string(text) + "'", offset);
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::IntegersMod:
      return "Zmod " + std::to_string(modulus_);
    case RingKind::Rationals:
      return "Q";
  }
  return "?";
}

Scalar::Scalar(Ring ring, BigInt value) : ring_(ring), num_(std::move(value)), den_(1) {
  normalize();
}

Scalar::Scalar(Ring ring, BigInt num, BigInt den)
    : ring_(ring), num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error("zero denominator");
  if (ring_.kind() != RingKind::Rationals && den_ != 1 && den_ != -1) {
    throw Error("fraction outside the rationals");
  }
  normalize();
}

void Scalar::normalize() {
  switch (ring_.kind()) {
    case RingKind::Integers:
      if (den_ == -1) {
        num_ = -num_;
        den_ = 1;
      }
      break;
    case RingKind::IntegersMod: {
      if (den_ == -1) {
        num_ = -num_;
        den_ = 1;
      }
      BigInt m(ring_.modulus());
      num_ %= m;
      if (num_ < 0) num_ += m;
      break;
    }
    case RingKind::Rationals: {
      if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      BigInt g = boost::multiprecision::gcd(num_, den_);
      if (g > 1) {
        num_ /= g;
        den_ /= g;
      }
      if (num_ == 0) den_ = 1;
      break;
    }
  }
}

Scalar Scalar::parse(Ring ring, std::string_view text) {
  std::size_t offset = 0;
  text = trim(text, offset);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(ring, parse_integer(text, offset));
  if (ring.kind() != RingKind::Rationals) {
    throw SyntaxError("fraction literal over " + ring.to_string(), offset + slash);
  }
  BigInt num = parse_integer(text.substr(0, slash), offset);
  BigInt den = parse_integer(text.substr(slash + 1), offset + slash + 1);
  if (den == 0) throw SyntaxError("zero denominator", offset + slash + 1);
  return Scalar(ring, std::move(num), std::move(den));
}

std::string Scalar::to_string() const {
  std::string out = num_.str();
  if (den_ != 1) out += "/" + den_.str();
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  if (a.den_ == 1 && b.den_ == 1) return Scalar(a.ring_, a.num_ + b.num_);
  return Scalar(a.ring_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  if (a.den_ == 1 && b.den_ == 1) return Scalar(a.ring_, a.num_ * b.num_);
  return Scalar(a.ring_, a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a) {
  if (a.den_ == 1) return Scalar(a.ring_, -a.num_);
  return Scalar(a.ring_, -a.num_, a.den_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cofree
