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

#ifndef QPCODES_EXACT_BALL_HPP_
#define QPCODES_EXACT_BALL_HPP_

// Exact integer balls B_p^n(r) in Z^n and the set of attainable l_p
// distances. A radius r is never stored as a floating-point number: it is
// carried as the integer s = r^p (PowRadius), so every membership and
// comparison decision is an integer comparison.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qpcodes/integer.hpp"

namespace qpcodes {

struct PowRadius {
  Int s = 0;

  constexpr PowRadius() = default;
  constexpr explicit PowRadius(Int value) : s(value) {}

  friend constexpr auto operator<=>(PowRadius, PowRadius) = default;
};

// floor(r^p) for a rational r >= 0. Integer points lie in the ball of
// radius r exactly when their p-th power norm is at most this value.
PowRadius pow_radius_of(int p, const Rational& r);

// s^(1/p) as a double, for display and for the real-valued bounds.
double radius_value(int p, PowRadius s);

// Points of Z^n stored flat, `dim` coordinates per point.
class PointList {
 public:
  PointList() = default;
  explicit PointList(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return coords_.empty(); }

  std::span<const Int> operator[](std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  void push_back(std::span<const Int> point);
  void reserve(std::size_t points) { coords_.reserve(points * static_cast<std::size_t>(dim_)); }
  std::span<const Int> flat() const { return coords_; }

  friend bool operator==(const PointList&, const PointList&) = default;

 private:
  int dim_ = 0;
  std::vector<Int> coords_;
};

// sum_i |x_i|^p
Int norm_pow(std::span<const Int> x, int p);

// Ordered set of every s in [0, limit] that is a sum of n p-th powers of
// nonnegative integers.
class DistanceSet {
 public:
  DistanceSet(int n, int p, PowRadius limit, std::vector<PowRadius> elements);

  int dim() const { return n_; }
  int exponent() const { return p_; }
  PowRadius limit() const { return limit_; }
  const std::vector<PowRadius>& elements() const& { return elements_; }
  std::vector<PowRadius> elements() && { return std::move(elements_); }

  // Throws LimitExceeded when s lies beyond the generation limit.
  bool contains(PowRadius s) const;
  // Smallest element strictly greater than s.
  PowRadius successor(PowRadius s) const;
  // Largest element <= s (0 is always present).
  PowRadius largest_at_most(PowRadius s) const;
  // Number of elements in [a, b).
  Int gap_count(PowRadius a, PowRadius b) const;

 private:
  int n_;
  int p_;
  PowRadius limit_;
  std::vector<PowRadius> elements_;
};

bool is_representable(int n, int p, PowRadius s);
DistanceSet distance_set(int n, int p, PowRadius limit);
PowRadius successor(const DistanceSet& d, PowRadius s);
Int gap_count(const DistanceSet& d, PowRadius a, PowRadius b);

// All z in Z^n with sum |z_i|^p <= s, in lexicographic order.
PointList ball_points(int n, int p, PowRadius s);

// Ball points sorted by (norm, lexicographic), with their norms.
struct NormOrderedBall {
  PointList points;
  std::vector<Int> norms;
};
NormOrderedBall ball_points_by_norm(int n, int p, PowRadius s);

// |B_p^n(s^(1/p)) ∩ Z^n|, counted without materializing the points.
Int mu(int n, int p, PowRadius s);

enum class BallCase { kCaseI, kCaseII, kCaseIII, kCaseIV, kUnclassified };

const char* to_string(BallCase c);

struct BallShape {
  BallCase kind = BallCase::kUnclassified;
  std::optional<Int> predicted_mu;
  // Integer radius only: the case (ii) side condition evaluated with an
  // un-exponentiated (r - 2) term gives a different verdict than the
  // (r - 2)^p form used for classification.
  bool literal_case_ii_disagrees = false;

  friend bool operator==(const BallShape&, const BallShape&) = default;
};

// Shape of the polyomino of B_p^n(r) for rational r > 0, with the closed
// form point count of the matching case. Cases are tried in order
// (i) -> (iv); all conditions are exact integer inequalities.
BallShape classify_ball(int n, int p, const Rational& r);
// Same, for r = s^(1/p) exactly.
BallShape classify_ball_pow(int n, int p, PowRadius s);

// (n-1)(r-1)^p + (r-2) <= r^p, the case (ii) side condition read literally.
bool literal_case_ii_condition(int n, int p, Int r);

// Lebesgue volume of the unit l_p ball in R^n.
double unit_ball_volume(int n, int p);

}  // namespace qpcodes

#endif  // QPCODES_EXACT_BALL_HPP_
