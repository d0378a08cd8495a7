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

#ifndef QPCODES_FAMILIES_HPP_
#define QPCODES_FAMILIES_HPP_

// Explicit planar lattice families with known degree of imperfection and
// discrete packing density, plus the exponent thresholds under which the
// first two families apply.

#include <optional>
#include <string>
#include <vector>

#include "qpcodes/lattice.hpp"

namespace qpcodes {

enum class FamilyKind { kA, kB, kC, kD };

const char* to_string(FamilyKind kind);
// Accepts "A".."D" (case-insensitive).
FamilyKind parse_family_kind(const std::string& text);

struct FamilySpec {
  FamilyKind family = FamilyKind::kA;
  Rational r;
  int p = 2;
  LatticeBasis basis;
  Int predicted_t = 0;
  Rational predicted_disc_density;
};

// The first violated hypothesis of the family at (r, p), or nullopt.
std::optional<std::string> family_hypothesis_failure(FamilyKind kind, const Rational& r, int p);

// Throws HypothesisViolated naming the failing inequality.
FamilySpec family(FamilyKind kind, const Rational& r, int p);

// Generator rows of the family at radius parameter r (no hypothesis check).
IntMatrix family_rows(FamilyKind kind, const Rational& r);

// Least p with 2 (r-1)^p <= r^p.
int min_p_threshold_A(Int r);

// Every p with 2 (r-1)^p > r^p and (r-1)^p + (r-2)^p <= r^p.
std::vector<int> p_range_B(Int r);

}  // namespace qpcodes

#endif  // QPCODES_FAMILIES_HPP_
