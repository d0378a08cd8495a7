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

#include "qpcodes/bounds.hpp"

#include <cmath>

#include "qpcodes/errors.hpp"

namespace qpcodes {
namespace {

// Distance set with a power-of-two limit of at least `needed`.
DistanceSet distance_set_covering(int n, int p, Int needed) {
  Int limit = 64;
  while (limit < needed) limit = checked_mul(limit, 2);
  return distance_set(n, p, PowRadius(limit));
}

// Every s has a successor below (floor(s^(1/p)) + 1)^p.
Int successor_limit(int p, Int s) { return ipow(iroot_floor(s, p) + 1, p); }

BoundRow make_row(int n, int p, const DistanceSet& d, PowRadius r_pow, BoundMode mode) {
  const double vol = unit_ball_volume(n, p);
  const double root_n = std::pow(static_cast<double>(n), 1.0 / p);
  const double r = radius_value(p, r_pow);
  const double big_r = mode == BoundMode::kPerfect ? r : radius_value(p, successor(d, r_pow));
  BoundRow row;
  row.r_pow = r_pow;
  row.mu = mu(n, p, r_pow);
  const double x = 2.0 * r / root_n;
  row.delta_lower = x > 1.0 ? std::pow((x - 1.0) / (x + 1.0), n) : 0.0;
  row.theta_upper_R = vol * std::pow(big_r + root_n / 2.0, n) / static_cast<double>(row.mu);
  row.theta_upper_r = vol * std::pow(r + root_n, n) / static_cast<double>(row.mu);
  return row;
}

struct Scan {
  std::vector<BoundRow> rows;
  PowRadius r_star;
  double big_r_star = 0;
};

// Returns nullopt when `d` is too short to finish the scan.
std::optional<Scan> try_scan(int n, int p, double theta_min, BoundMode mode, BoundColumn column,
                             const DistanceSet& d) {
  Scan scan;
  Int failure_start = -1;
  const auto& elems = d.elements();
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
    const PowRadius s = elems[i];
    if (failure_start > 0 && s.s >= 4 * failure_start) {
      const Int r_star = scan.r_star.s;
      scan.big_r_star = mode == BoundMode::kPerfect ? radius_value(p, scan.r_star)
                                                    : radius_value(p, successor(d, PowRadius(r_star)));
      return scan;
    }
    if (s.s == 0) continue;
    BoundRow row = make_row(n, p, d, s, mode);
    const double bound = column == BoundColumn::kCoveringRadius ? row.theta_upper_R : row.theta_upper_r;
    if (bound >= theta_min) {
      scan.r_star = s;
      failure_start = -1;
    } else if (failure_start < 0) {
      failure_start = s.s;
    }
    scan.rows.push_back(row);
  }
  return std::nullopt;
}

Scan run_scan(int n, int p, double theta_min, BoundMode mode,
              BoundColumn column = BoundColumn::kCoveringRadius) {
  if (n < 1 || p < 1) throw InvalidArgument("n and p must be positive");
  if (!(theta_min > 0)) throw InvalidArgument("theta_min must be positive");
  for (Int limit = 256;; limit = checked_mul(limit, 4)) {
    if (auto scan = try_scan(n, p, theta_min, mode, column, distance_set(n, p, PowRadius(limit)))) return *scan;
  }
}

Int volume_of(int n, int p, double theta_min, const Scan& scan) {
  const double root_n = std::pow(static_cast<double>(n), 1.0 / p);
  return static_cast<Int>(
      std::floor(unit_ball_volume(n, p) * std::pow(scan.big_r_star + root_n / 2.0, n) / theta_min));
}

}  // namespace

const char* to_string(BoundMode mode) { return mode == BoundMode::kPerfect ? "perfect" : "quasiperfect"; }

PerfectRadiusBound perfect_radius_bound(int n, int p, double delta_sup) {
  if (!(delta_sup > 0 && delta_sup < 1)) throw InvalidArgument("delta_sup must lie in (0, 1)");
  const double q = std::pow(delta_sup, 1.0 / n);
  const double bound = std::pow(static_cast<double>(n), 1.0 / p) / 2.0 * (1.0 + q) / (1.0 - q);
  const Int cap = static_cast<Int>(std::floor(std::pow(bound, p)));
  const DistanceSet d = distance_set(n, p, PowRadius(cap));
  return {bound, d.largest_at_most(PowRadius(cap))};
}

BoundRow quasiperfect_bound_row(int n, int p, PowRadius r_pow, BoundMode mode) {
  const DistanceSet d = distance_set_covering(n, p, successor_limit(p, r_pow.s));
  if (!d.contains(r_pow)) throw InvalidArgument("r_pow " + std::to_string(r_pow.s) + " is not an attainable distance");
  return make_row(n, p, d, r_pow, mode);
}


PowRadius last_feasible_radius(int n, int p, double theta_min, BoundMode mode, BoundColumn column) {
  return run_scan(n, p, theta_min, mode, column).r_star;
}

Int max_search_volume(int n, int p, double theta_min, BoundMode mode) {
  return volume_of(n, p, theta_min, run_scan(n, p, theta_min, mode));
}

BoundReport bound_report(int n, int p, double theta_min, BoundMode mode) {
  Scan scan = run_scan(n, p, theta_min, mode);
  BoundReport report;
  report.n = n;
  report.p = p;
  report.theta_min = theta_min;
  report.mode = mode;
  report.r_pow_max = scan.r_star;
  report.volume_max = volume_of(n, p, theta_min, scan);
  report.mu_at_r_max = mu(n, p, scan.r_star);
  report.rows = std::move(scan.rows);
  return report;
}

std::optional<DensityConstants> known_density_constants(int n, int p) {
  if (p != 2) return std::nullopt;
  if (n == 2) return DensityConstants{1.2092, 0.9069};
  if (n == 3) return DensityConstants{1.4635, std::nullopt};
  return std::nullopt;
}

}  // namespace qpcodes
