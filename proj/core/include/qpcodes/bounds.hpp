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

#ifndef QPCODES_BOUNDS_HPP_
#define QPCODES_BOUNDS_HPP_

// Density bounds that cap the packing radius, and hence the volume, of
// perfect and quasi-perfect lattice codes.

#include <optional>
#include <vector>

#include "qpcodes/exact_ball.hpp"

namespace qpcodes {

enum class BoundMode { kPerfect, kQuasiPerfect };

const char* to_string(BoundMode mode);

struct BoundRow {
  PowRadius r_pow;
  Int mu = 0;
  // Packing density a perfect code of this radius would force.
  double delta_lower = 0;
  // Covering density upper bounds V (R + n^(1/p)/2)^n / mu and
  // V (r + n^(1/p))^n / mu.
  double theta_upper_R = 0;
  double theta_upper_r = 0;
};

// Which covering density bound a radius scan tests.
enum class BoundColumn { kCoveringRadius, kPackingRadius };

struct BoundReport {
  int n = 2;
  int p = 2;
  double theta_min = 0;
  BoundMode mode = BoundMode::kQuasiPerfect;
  std::vector<BoundRow> rows;
  PowRadius r_pow_max;
  Int volume_max = 0;
  // mu(r_pow_max): the largest ball a code with the extremal packing
  // radius can carry.
  Int mu_at_r_max = 0;
};

struct PerfectRadiusBound {
  double bound = 0;
  PowRadius r_pow_max;
};

// Largest packing radius a perfect lattice code can have when no lattice
// packing is denser than delta_sup.
PerfectRadiusBound perfect_radius_bound(int n, int p, double delta_sup);

// Bound figures at packing radius r_pow; R is the next attainable distance
// (quasi-perfect) or r itself (perfect).
BoundRow quasiperfect_bound_row(int n, int p, PowRadius r_pow, BoundMode mode = BoundMode::kQuasiPerfect);

// Last attainable radius r* whose bound in `column` is still >= theta_min.
// The scan stops after a run of failures spanning [s, 4s].
PowRadius last_feasible_radius(int n, int p, double theta_min, BoundMode mode,
                               BoundColumn column = BoundColumn::kCoveringRadius);

// floor(V (R(r*) + n^(1/p)/2)^n / theta_min) for the covering radius scan.
Int max_search_volume(int n, int p, double theta_min, BoundMode mode);

BoundReport bound_report(int n, int p, double theta_min, BoundMode mode);

// Best known lattice covering (and packing) densities used as defaults.
struct DensityConstants {
  double theta_min = 0;
  std::optional<double> delta_sup;
};
std::optional<DensityConstants> known_density_constants(int n, int p);

}  // namespace qpcodes

#endif  // QPCODES_BOUNDS_HPP_
