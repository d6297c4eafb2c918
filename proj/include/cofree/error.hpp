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

#ifndef COFREE_ERROR_HPP
#define COFREE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cofree {

// Base of every error raised by the library.
struct Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixedRings : public Error { using Error::Error; };
struct SpaceMismatch : public Error { using Error::Error; };
struct ArityMismatch : public Error { using Error::Error; };
struct InvalidArity : public Error { using Error::Error; };
struct InvalidPosition : public Error { using Error::Error; };
struct NotPlain : public Error { using Error::Error; };
struct OddChildCount : public Error { using Error::Error; };

// A Literal generating tree was observed below its explicit depth.
struct TruncationExceeded : public Error { using Error::Error; };

// A bounded sweep or enumeration would exceed its configured cap.
struct BoundTooLarge : public Error { using Error::Error; };

struct SyntaxError : public Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

}  // namespace cofree

#endif  // COFREE_ERROR_HPP
