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

// Exact coefficient rings: the integers, residues modulo n and the
// rationals. Nothing in the library uses floating point.

#ifndef COFREE_SCALAR_HPP
#define COFREE_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cofree {

using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { Integers, IntegersMod, Rationals };

class Ring {
 public:
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  // Throws InvalidArity when modulus < 2.
  static Ring integers_mod(std::uint64_t modulus);

  // Accepts "Z", "Zmod <n>" or "Q" (the part after the `ring` keyword).
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }

  // "Z", "Zmod 4", "Q".
  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;
};

// An element of a Ring. Residues are kept in [0, modulus); rationals are
// kept in lowest terms with a positive denominator. For the integer rings
// the denominator is always 1.
class Scalar {
 public:
  Scalar(Ring ring, BigInt value);
  // Only valid over the rationals unless den == 1.
  Scalar(Ring ring, BigInt num, BigInt den);

  static Scalar zero(Ring ring) { return Scalar(ring, BigInt(0)); }
  static Scalar one(Ring ring) { return Scalar(ring, BigInt(1)); }
  static Scalar of(Ring ring, long long value) { return Scalar(ring, BigInt(value)); }

  // Integer literal `-?[0-9]+`, or `a/b` over the rationals. Residues are
  // reduced on parse. Throws SyntaxError.
  static Scalar parse(Ring ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  // Throws MixedRings when the rings differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void normalize();

  Ring ring_;
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Named forms of the ring operations.
inline Scalar ringAdd(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar ringMul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar ringNeg(const Scalar& a) { return -a; }
inline bool ringEq(const Scalar& a, const Scalar& b) { return a == b; }

}  // namespace cofree

#endif  // COFREE_SCALAR_HPP
