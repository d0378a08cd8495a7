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

#include <cmath>

#include "qpcodes/code_analysis.hpp"
#include "qpcodes/families.hpp"

namespace qpcodes {
namespace {

void expect_prediction_holds(FamilyKind kind, const Rational& r, int p) {
  const FamilySpec spec = family(kind, r, p);
  const CodeAnalysis a = analyze(spec.basis, p);
  EXPECT_EQ(a.t, spec.predicted_t) << to_string(kind) << " r=" << to_string(r) << " p=" << p;
  EXPECT_EQ(a.disc_pack_density_exact, spec.predicted_disc_density)
      << to_string(kind) << " r=" << to_string(r) << " p=" << p;
}

TEST(FamilyProperties, FamilyAOverItsRange) {
  for (Int r = 2; r <= 8; ++r) {
    for (int p = min_p_threshold_A(r); p <= 10; ++p) expect_prediction_holds(FamilyKind::kA, Rational(r), p);
  }
}

TEST(FamilyProperties, FamilyBOverItsRange) {
  int checked = 0;
  for (Int r = 3; r <= 10; ++r) {
    for (int p : p_range_B(r)) {
      expect_prediction_holds(FamilyKind::kB, Rational(r), p);
      ++checked;
    }
  }
  EXPECT_GT(checked, 8);
}

TEST(FamilyProperties, FamiliesCAndDAtTheirExamples) {
  expect_prediction_holds(FamilyKind::kC, Rational(11, 2), 4);
  expect_prediction_holds(FamilyKind::kD, Rational(26, 5), 4);
}

TEST(FamilyProperties, EveryAdmissibleNonIntegerRadiusUpToEight) {
  // Tenths in (2, 8]; the hypotheses select the admissible (r, p).
  int checked = 0;
  for (Int k = 21; k <= 80; ++k) {
    if (k % 10 == 0) continue;
    const Rational r(k, 10);
    for (int p = 1; p <= 10; ++p) {
      for (FamilyKind kind : {FamilyKind::kC, FamilyKind::kD}) {
        if (family_hypothesis_failure(kind, r, p)) continue;
        expect_prediction_holds(kind, r, p);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(FamilyProperties, ThresholdsAgreeWithFloatingLogForm) {
  for (Int r = 2; r <= 40; ++r) {
    const int p = min_p_threshold_A(r);
    const double x = std::log(2.0) / std::log(static_cast<double>(r) / static_cast<double>(r - 1));
    EXPECT_GE(p, x - 1e-9) << r;
    EXPECT_LT(p - 1, x + 1e-9) << r;
  }
}

}  // namespace
}  // namespace qpcodes
