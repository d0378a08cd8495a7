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

#include <gtest/gtest.h>

#include <limits>

#include "qpcodes/integer.hpp"

namespace qpcodes {
namespace {

TEST(Integer, CheckedArithmeticThrowsOnOverflow) {
  constexpr Int kMax = std::numeric_limits<Int>::max();
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_EQ(checked_mul(-4, 6), -24);
  EXPECT_THROW(checked_add(kMax, 1), Overflow);
  EXPECT_THROW(checked_sub(std::numeric_limits<Int>::min(), 1), Overflow);
  EXPECT_THROW(checked_mul(kMax / 2 + 1, 2), Overflow);
  EXPECT_THROW(ipow(10, 19), Overflow);
}

TEST(Integer, IpowAndIntegerRoot) {
  EXPECT_EQ(ipow(3, 0), 1);
  EXPECT_EQ(ipow(-2, 3), -8);
  EXPECT_EQ(iroot_floor(0, 3), 0);
  EXPECT_EQ(iroot_floor(26, 3), 2);
  EXPECT_EQ(iroot_floor(27, 3), 3);
  EXPECT_EQ(iroot_floor(1296, 4), 6);
  EXPECT_EQ(iroot_floor(1295, 4), 5);
  EXPECT_EQ(iroot_floor(std::numeric_limits<Int>::max(), 2), 3037000499);
  EXPECT_THROW(iroot_floor(-1, 2), InvalidArgument);
}

TEST(Integer, FloorDivisionRoundsTowardNegativeInfinity) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_mod(-7, 24), 17);
  EXPECT_EQ(floor_mod(7, -2), -1);
  EXPECT_EQ(floor_of(Rational(26, 5)), 5);
  EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
}

TEST(Integer, ParsesRationalsInEveryAcceptedForm) {
  EXPECT_EQ(parse_rational("26/5"), Rational(26, 5));
  EXPECT_EQ(parse_rational("5.5"), Rational(11, 2));
  EXPECT_EQ(parse_rational(" 3 "), Rational(3));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(to_string(Rational(109, 115)), "109/115");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_rational("1."), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
}

TEST(Integer, MatrixParsingAcceptsJsonAndCompactForms) {
  const IntMatrix expected = IntMatrix::from_rows({{1, 5}, {0, 24}});
  EXPECT_EQ(parse_matrix("[[1,5],[0,24]]"), expected);
  EXPECT_EQ(parse_matrix("[[1, 5], [0, 24]]"), expected);
  EXPECT_EQ(parse_matrix("1,5;0,24"), expected);
  EXPECT_EQ(parse_matrix(" 1 , 5 ; 0 , 24 "), expected);
  EXPECT_EQ(parse_matrix("1,0,5;0,1,-8;0,0,25"), IntMatrix::from_rows({{1, 0, 5}, {0, 1, -8}, {0, 0, 25}}));
  EXPECT_THROW(parse_matrix("1,5;0"), InvalidArgument);
  EXPECT_THROW(parse_matrix("1,x;0,24"), InvalidArgument);
  EXPECT_THROW(parse_matrix("[[1,5],[0,24]"), InvalidArgument);
  EXPECT_THROW(parse_matrix(""), InvalidArgument);
}

TEST(Integer, MatrixFormattingRoundTrips) {
  const IntMatrix m = IntMatrix::from_rows({{5, 11}, {13, -1}});
  EXPECT_EQ(to_json_string(m), "[[5,11],[13,-1]]");
  EXPECT_EQ(to_compact_string(m), "5,11;13,-1");
  EXPECT_EQ(parse_matrix(to_json_string(m)), m);
  EXPECT_EQ(parse_matrix(to_compact_string(m)), m);
}

TEST(Integer, MatrixProductAndOrdering) {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(a * IntMatrix::identity(2), a);
  EXPECT_EQ(a * a, IntMatrix::from_rows({{7, 10}, {15, 22}}));
  EXPECT_LT(IntMatrix::from_rows({{1, 4}, {0, 24}}), IntMatrix::from_rows({{1, 5}, {0, 24}}));
  EXPECT_THROW(IntMatrix::from_rows({{1, 2}, {3}}), InvalidArgument);
}

}  // namespace
}  // namespace qpcodes
