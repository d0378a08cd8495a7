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

#ifndef QPCODES_INTEGER_HPP_
#define QPCODES_INTEGER_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "qpcodes/errors.hpp"

namespace qpcodes {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// a^p for p >= 0; throws Overflow when the result does not fit.
Int ipow(Int base, int p);
BigInt big_pow(const BigInt& base, int p);

// Largest a >= 0 with a^p <= s, for s >= 0 and p >= 1.
Int iroot_floor(Int s, int p);

// Floor division and the matching nonnegative remainder (b > 0).
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

Int floor_of(const Rational& r);

// Parses "7", "-3", "11/2" or a terminating decimal such as "5.2".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// Dense row-major integer matrix. Ordering is lexicographic on
// (rows, cols, entries in row-major order).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  Int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  std::span<const Int> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i * cols_), static_cast<std::size_t>(cols_)};
  }
  std::span<const Int> data() const { return data_; }

  std::vector<std::vector<Int>> to_rows() const;
  IntMatrix operator*(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

// "[[1,5],[0,24]]"
std::string to_json_string(const IntMatrix& m);
// "1,5;0,24"
std::string to_compact_string(const IntMatrix& m);
// Accepts either form above; whitespace is ignored. Throws InvalidArgument
// on malformed or ragged input.
IntMatrix parse_matrix(const std::string& text);

}  // namespace qpcodes

#endif  // QPCODES_INTEGER_HPP_
