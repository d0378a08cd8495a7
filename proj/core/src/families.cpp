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

#include "qpcodes/families.hpp"

#include <cctype>

#include "qpcodes/errors.hpp"

namespace qpcodes {
namespace {

// Exact comparisons against r^p for rational r = a/b.
class PowCompare {
 public:
  PowCompare(const Rational& r, int p)
      : p_(p), num_(big_pow(BigInt(r.numerator()), p)), den_(big_pow(BigInt(r.denominator()), p)) {}

  // sum of |x_i|^p <= r^p
  bool at_most(std::initializer_list<Int> xs) const { return lhs(xs) * den_ <= num_; }
  bool above(std::initializer_list<Int> xs) const { return !at_most(xs); }

 private:
  BigInt lhs(std::initializer_list<Int> xs) const {
    BigInt sum = 0;
    for (Int x : xs) sum += big_pow(BigInt(x < 0 ? -x : x), p_);
    return sum;
  }

  int p_;
  BigInt num_;
  BigInt den_;
};

// sum of |x_i|^p <= sum of |y_j|^p
bool pow_sum_le(std::initializer_list<Int> xs, std::initializer_list<Int> ys, int p) {
  BigInt l = 0;
  BigInt r = 0;
  for (Int x : xs) l += big_pow(BigInt(x < 0 ? -x : x), p);
  for (Int y : ys) r += big_pow(BigInt(y < 0 ? -y : y), p);
  return l <= r;
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kA: return "A";
    case FamilyKind::kB: return "B";
    case FamilyKind::kC: return "C";
    case FamilyKind::kD: return "D";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return FamilyKind::kA;
      case 'B': return FamilyKind::kB;
      case 'C': return FamilyKind::kC;
      case 'D': return FamilyKind::kD;
      default: break;
    }
  }
  throw InvalidArgument("family kind must be one of A, B, C, D: '" + text + "'");
}

std::optional<std::string> family_hypothesis_failure(FamilyKind kind, const Rational& r, int p) {
  if (p < 1) return "p >= 1";
  if (r <= 0) return "r > 0";
  const PowCompare cmp(r, p);
  const Int f = floor_of(r);
  switch (kind) {
    case FamilyKind::kA:
      if (!is_integer(r)) return "r is an integer";
      if (f <= 1) return "r > 1";
      if (!cmp.at_most({f - 1, f - 1})) return "2(r-1)^p <= r^p";
      return std::nullopt;
    case FamilyKind::kB:
      if (!is_integer(r)) return "r is an integer";
      if (f < 2) return "r >= 2";
      if (!cmp.above({f - 1, f - 1})) return "2(r-1)^p > r^p";
      if (!cmp.at_most({f - 1, f - 2})) return "(r-1)^p + (r-2)^p <= r^p";
      return std::nullopt;
    case FamilyKind::kC:
      if (is_integer(r)) return "r is not an integer";
      if (!cmp.above({f, f})) return "2 floor(r)^p > r^p";
      if (!cmp.at_most({f, f - 1})) return "floor(r)^p + floor(r-1)^p <= r^p";
      if (!pow_sum_le({f, f}, {f + 1}, p)) return "2 floor(r)^p <= floor(r+1)^p";
      return std::nullopt;
    case FamilyKind::kD:
      if (is_integer(r)) return "r is not an integer";
      if (f < 2) return "floor(r) >= 2";
      if (!cmp.above({f, f - 1})) return "floor(r)^p + floor(r-1)^p > r^p";
      if (!cmp.at_most({f, f - 2})) return "floor(r)^p + floor(r-2)^p <= r^p";
      if (!pow_sum_le({f, f}, {f + 1}, p)) return "2 floor(r)^p <= floor(r+1)^p";
      return std::nullopt;
  }
  return "unknown family";
}

IntMatrix family_rows(FamilyKind kind, const Rational& r) {
  const Int f = floor_of(r);
  switch (kind) {
    case FamilyKind::kA: return IntMatrix::from_rows({{f, 2 * f - 1}, {2 * f, -1}});
    case FamilyKind::kB: return IntMatrix::from_rows({{f - 1, 2 * f - 1}, {2 * f, -1}});
    case FamilyKind::kC: return IntMatrix::from_rows({{2 * f + 1, -1}, {2 * f - 1, 2 * f}});
    case FamilyKind::kD: return IntMatrix::from_rows({{2 * f + 1, -2}, {2 * f - 2, 2 * f - 1}});
  }
  throw InvalidArgument("unknown family");
}

FamilySpec family(FamilyKind kind, const Rational& r, int p) {
  if (auto failure = family_hypothesis_failure(kind, r, p)) {
    throw HypothesisViolated(std::string("family ") + to_string(kind) + " at r=" + to_string(r) +
                             ", p=" + std::to_string(p) + " violates " + *failure);
  }
  const Int f = floor_of(r);
  FamilySpec spec{kind, r, p, LatticeBasis(family_rows(kind, r)), 0, Rational(0)};
  switch (kind) {
    case FamilyKind::kA:
      spec.predicted_t = (f == 2 || f == 3) ? 1 : f - 2;
      spec.predicted_disc_density = Rational((2 * f - 1) * (2 * f - 1) + 4, 4 * f * f - f);
      break;
    case FamilyKind::kB:
      spec.predicted_t = f - 1;
      spec.predicted_disc_density = Rational((2 * f - 1) * (2 * f - 1), 4 * f * f - f - 1);
      break;
    case FamilyKind::kC:
      spec.predicted_t = 1;
      spec.predicted_disc_density = Rational((2 * f + 1) * (2 * f + 1) - 4, 4 * f * f + 4 * f - 1);
      break;
    case FamilyKind::kD:
      spec.predicted_t = 2;
      spec.predicted_disc_density = Rational((2 * f + 1) * (2 * f + 1) - 12, 4 * f * f + 4 * f - 5);
      break;
  }
  return spec;
}

int min_p_threshold_A(Int r) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  // 2 (r-1)^p <= r^p holds from some p on and stays true.
  for (int p = 1;; ++p) {
    if (2 * big_pow(BigInt(r - 1), p) <= big_pow(BigInt(r), p)) return p;
  }
}

std::vector<int> p_range_B(Int r) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  std::vector<int> out;
  const int stop = min_p_threshold_A(r);
  for (int p = 1; p < stop; ++p) {
    const BigInt rp = big_pow(BigInt(r), p);
    if (big_pow(BigInt(r - 1), p) + big_pow(BigInt(r - 2), p) <= rp) out.push_back(p);
  }
  return out;
}

}  // namespace qpcodes
