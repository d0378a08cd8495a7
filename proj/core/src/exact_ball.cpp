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

#include "qpcodes/exact_ball.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

namespace qpcodes {
namespace {

void check_metric(int n, int p) {
  if (n < 1) throw InvalidArgument("dimension must be >= 1");
  if (p < 1) throw InvalidArgument("exponent p must be >= 1");
}

// pw[k] = k^p for k = 0..m
std::vector<Int> power_table(Int m, int p) {
  std::vector<Int> pw(static_cast<std::size_t>(m + 1));
  for (Int k = 0; k <= m; ++k) pw[static_cast<std::size_t>(k)] = ipow(k, p);
  return pw;
}

bool representable_descending(int remaining, int p, Int s, Int max_part) {
  if (s == 0) return true;
  if (remaining == 0) return false;
  Int top = std::min(max_part, iroot_floor(s, p));
  for (Int a = top; a >= 1; --a) {
    Int ap = ipow(a, p);
    // The remaining terms are each <= a^p.
    if (ap * remaining < s) break;
    if (representable_descending(remaining - 1, p, s - ap, a)) return true;
  }
  return false;
}

}  // namespace

PowRadius pow_radius_of(int p, const Rational& r) {
  if (r < 0) throw InvalidArgument("radius must be nonnegative");
  BigInt q = big_pow(BigInt(r.numerator()), p) / big_pow(BigInt(r.denominator()), p);
  if (q > BigInt(std::numeric_limits<Int>::max())) throw Overflow();
  return PowRadius(static_cast<Int>(q));
}

double radius_value(int p, PowRadius s) {
  const Int root = iroot_floor(s.s, p);
  if (ipow(root, p) == s.s) return static_cast<double>(root);
  return std::pow(static_cast<double>(s.s), 1.0 / p);
}

void PointList::push_back(std::span<const Int> point) {
  if (static_cast<int>(point.size()) != dim_) throw InvalidArgument("point dimension mismatch");
  coords_.insert(coords_.end(), point.begin(), point.end());
}

Int norm_pow(std::span<const Int> x, int p) {
  Int total = 0;
  for (Int v : x) total = checked_add(total, ipow(v < 0 ? -v : v, p));
  return total;
}

DistanceSet::DistanceSet(int n, int p, PowRadius limit, std::vector<PowRadius> elements)
    : n_(n), p_(p), limit_(limit), elements_(std::move(elements)) {}

bool DistanceSet::contains(PowRadius s) const {
  if (s > limit_) throw LimitExceeded("distance set generated up to " + std::to_string(limit_.s) + ", queried " + std::to_string(s.s));
  return std::binary_search(elements_.begin(), elements_.end(), s);
}

PowRadius DistanceSet::successor(PowRadius s) const {
  auto it = std::upper_bound(elements_.begin(), elements_.end(), s);
  if (it == elements_.end()) {
    throw LimitExceeded("no element above " + std::to_string(s.s) + " within limit " + std::to_string(limit_.s));
  }
  return *it;
}

PowRadius DistanceSet::largest_at_most(PowRadius s) const {
  if (s > limit_) throw LimitExceeded("distance set generated up to " + std::to_string(limit_.s) + ", queried " + std::to_string(s.s));
  auto it = std::upper_bound(elements_.begin(), elements_.end(), s);
  return *std::prev(it);
}

Int DistanceSet::gap_count(PowRadius a, PowRadius b) const {
  if (a > b) throw InvalidArgument("gap_count requires a <= b");
  if (b > limit_) throw LimitExceeded("distance set generated up to " + std::to_string(limit_.s) + ", queried " + std::to_string(b.s));
  auto lo = std::lower_bound(elements_.begin(), elements_.end(), a);
  auto hi = std::lower_bound(elements_.begin(), elements_.end(), b);
  return static_cast<Int>(hi - lo);
}

bool is_representable(int n, int p, PowRadius s) {
  check_metric(n, p);
  if (s.s < 0) throw InvalidArgument("PowRadius must be nonnegative");
  return representable_descending(n, p, s.s, iroot_floor(s.s, p));
}

DistanceSet distance_set(int n, int p, PowRadius limit) {
  check_metric(n, p);
  if (limit.s < 0) throw InvalidArgument("limit must be nonnegative");
  const Int m = iroot_floor(limit.s, p);
  const std::vector<Int> pw = power_table(m, p);
  // Sparse path: enumerate nondecreasing index tuples when there are far
  // fewer of them than bitset words.
  double tuples = 1.0;
  for (int k = 1; k <= n; ++k) tuples *= static_cast<double>(m + k) / k;
  if (tuples < static_cast<double>(limit.s) / 64.0) {
    std::vector<Int> sums;
    auto rec = [&](auto&& self, int depth, std::size_t from, Int acc) -> void {
      if (depth == n) {
        sums.push_back(acc);
        return;
      }
      for (std::size_t i = from; i < pw.size() && pw[i] <= limit.s - acc; ++i) self(self, depth + 1, i, acc + pw[i]);
    };
    rec(rec, 0, 0, 0);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    std::vector<PowRadius> elements(sums.begin(), sums.end());
    return DistanceSet(n, p, limit, std::move(elements));
  }
  const auto size = static_cast<std::size_t>(limit.s) + 1;
  // n-fold sumset of the p-th powers, as shift-or over a bitset.
  boost::dynamic_bitset<> reach(size);
  reach.set(0);
  for (int round = 0; round < n; ++round) {
    boost::dynamic_bitset<> next(size);
    for (Int v : pw) next |= reach << static_cast<std::size_t>(v);
    reach = std::move(next);
  }
  std::vector<PowRadius> elements;
  elements.reserve(reach.count());
  for (auto i = reach.find_first(); i != boost::dynamic_bitset<>::npos; i = reach.find_next(i)) {
    elements.emplace_back(static_cast<Int>(i));
  }
  return DistanceSet(n, p, limit, std::move(elements));
}

PowRadius successor(const DistanceSet& d, PowRadius s) { return d.successor(s); }

Int gap_count(const DistanceSet& d, PowRadius a, PowRadius b) { return d.gap_count(a, b); }

PointList ball_points(int n, int p, PowRadius s) {
  check_metric(n, p);
  PointList out(n);
  if (s.s < 0) return out;
  const Int m = iroot_floor(s.s, p);
  const std::vector<Int> pw = power_table(m, p);
  std::vector<Int> z(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int depth, Int budget) -> void {
    const Int bound = iroot_floor(budget, p);
    for (Int v = -bound; v <= bound; ++v) {
      z[static_cast<std::size_t>(depth)] = v;
      const Int rest = budget - pw[static_cast<std::size_t>(v < 0 ? -v : v)];
      if (depth + 1 == n) {
        out.push_back(z);
      } else {
        self(self, depth + 1, rest);
      }
    }
  };
  rec(rec, 0, s.s);
  return out;
}

NormOrderedBall ball_points_by_norm(int n, int p, PowRadius s) {
  PointList lex = ball_points(n, p, s);
  std::vector<Int> norms(lex.size());
  for (std::size_t i = 0; i < lex.size(); ++i) norms[i] = norm_pow(lex[i], p);
  std::vector<std::size_t> order(lex.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Stable: ties keep lexicographic order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });
  NormOrderedBall out{PointList(n), {}};
  out.points.reserve(lex.size());
  out.norms.reserve(lex.size());
  for (std::size_t i : order) {
    out.points.push_back(lex[i]);
    out.norms.push_back(norms[i]);
  }
  return out;
}

Int mu(int n, int p, PowRadius s) {
  check_metric(n, p);
  if (s.s < 0) return 0;
  const std::vector<Int> pw = power_table(iroot_floor(s.s, p), p);
  auto rec = [&](auto&& self, int remaining, Int budget) -> Int {
    const Int bound = iroot_floor(budget, p);
    if (remaining == 1) return 2 * bound + 1;
    Int total = self(self, remaining - 1, budget);
    for (Int v = 1; v <= bound; ++v) total += 2 * self(self, remaining - 1, budget - pw[static_cast<std::size_t>(v)]);
    return total;
  };
  return rec(rec, n, s.s);
}

const char* to_string(BallCase c) {
  switch (c) {
    case BallCase::kCaseI: return "i";
    case BallCase::kCaseII: return "ii";
    case BallCase::kCaseIII: return "iii";
    case BallCase::kCaseIV: return "iv";
    case BallCase::kUnclassified: return "unclassified";
  }
  return "unclassified";
}

bool literal_case_ii_condition(int n, int p, Int r) {
  BigInt lhs = BigInt(n - 1) * big_pow(BigInt(r - 1), p) + BigInt(r - 2);
  return lhs <= big_pow(BigInt(r), p);
}

namespace {

// Shared case analysis. `at_most_rp(q)` decides q <= r^p exactly; `integral`
// says whether r is an integer, in which case f = r.
template <class AtMost>
BallShape classify_with(int n, int p, bool integral, Int f, AtMost at_most_rp) {
  auto pw = [&](Int v) { return big_pow(BigInt(v < 0 ? -v : v), p); };
  BallShape shape;
  if (integral) {
    const Int k = f;
    const Int side = 2 * k - 1;
    if (at_most_rp(BigInt(n) * pw(k - 1))) {
      shape.kind = BallCase::kCaseI;
      shape.predicted_mu = checked_add(ipow(side, n), 2 * n);
      return shape;
    }
    const bool exponentiated = at_most_rp(BigInt(n - 1) * pw(k - 1) + pw(k - 2));
    shape.literal_case_ii_disagrees = exponentiated != literal_case_ii_condition(n, p, k);
    if (exponentiated) {
      shape.kind = BallCase::kCaseII;
      shape.predicted_mu = checked_sub(checked_add(ipow(side, n), 2 * n), ipow(2, n));
    }
    return shape;
  }

  const Int side = 2 * f + 1;
  const BigInt near_corner = BigInt(n - 1) * pw(f);
  if (!at_most_rp(BigInt(n) * pw(f)) && at_most_rp(near_corner + pw(f - 1))) {
    shape.kind = BallCase::kCaseIII;
    shape.predicted_mu = checked_sub(ipow(side, n), ipow(2, n));
    return shape;
  }
  if (!at_most_rp(near_corner + pw(f - 1)) && at_most_rp(near_corner + pw(f - 2))) {
    shape.kind = BallCase::kCaseIV;
    shape.predicted_mu = checked_sub(ipow(side, n), checked_mul(n + 1, ipow(2, n)));
  }
  return shape;
}

}  // namespace

BallShape classify_ball(int n, int p, const Rational& r) {
  check_metric(n, p);
  if (r <= 0) throw InvalidArgument("classify_ball requires r > 0");
  // q <= r^p as q * b^p <= a^p for r = a/b.
  const BigInt a_pow = big_pow(BigInt(r.numerator()), p);
  const BigInt b_pow = big_pow(BigInt(r.denominator()), p);
  return classify_with(n, p, r.denominator() == 1, floor_of(r),
                       [&](const BigInt& q) { return q * b_pow <= a_pow; });
}

BallShape classify_ball_pow(int n, int p, PowRadius s) {
  check_metric(n, p);
  if (s.s <= 0) throw InvalidArgument("classify_ball requires r > 0");
  const Int f = iroot_floor(s.s, p);
  const BigInt rp(s.s);
  return classify_with(n, p, ipow(f, p) == s.s, f, [&](const BigInt& q) { return q <= rp; });
}

double unit_ball_volume(int n, int p) {
  check_metric(n, p);
  return std::pow(2.0 * std::tgamma(1.0 / p + 1.0), n) / std::tgamma(static_cast<double>(n) / p + 1.0);
}

}  // namespace qpcodes
