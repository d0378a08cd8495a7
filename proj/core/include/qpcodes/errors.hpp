// Copyright 2026 The qpcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPCODES_ERRORS_HPP_
#define QPCODES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qpcodes {

// Base class of every error raised by the library. The CLI maps these to
// exit code 1 (bad input) and anything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix: determinant is zero") {}
  using Error::Error;
};

// A distance set was asked about a value beyond the limit it was generated
// with. Callers regenerate with a larger limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

// Raised by checked 64-bit arithmetic. Algorithms that can exceed 64 bits
// catch it and redo the work with arbitrary precision.
class Overflow : public Error {
 public:
  Overflow() : Error("integer overflow") {}
};

}  // namespace qpcodes

#endif  // QPCODES_ERRORS_HPP_
