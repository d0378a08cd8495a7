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

#include <algorithm>
#include <iterator>

#include "qpcodes/cli/cli.hpp"
#include "qpcodes/errors.hpp"

namespace qpcodes::cli {
namespace {

constexpr int kDecimals = 4;

// Two attainable distances on each side of `center`, plus `center`.
std::vector<PowRadius> neighbourhood(int n, int p, PowRadius center) {
  const DistanceSet d = distance_set(n, p, PowRadius(2 * center.s + 64));
  const auto& e = d.elements();
  const auto it = std::lower_bound(e.begin(), e.end(), center);
  const auto lo = std::distance(e.begin(), it) >= 2 ? it - 2 : e.begin();
  const auto hi = std::min(it + 3, e.end());
  return {lo, hi};
}

Table table1() {
  const int n = 2;
  const int p = 2;
  const DensityConstants k = *known_density_constants(n, p);
  Table t;
  t.header = {"block", "r_pow", "mu", "delta_lower", "theta_upper_R", "theta_upper_r"};
  auto emit = [&](const char* block, BoundMode mode, PowRadius center) {
    for (PowRadius s : neighbourhood(n, p, center)) {
      const BoundRow row = quasiperfect_bound_row(n, p, s, mode);
      t.rows.push_back({block, std::to_string(s.s), std::to_string(row.mu), fixed(row.delta_lower, kDecimals),
                        fixed(row.theta_upper_R, kDecimals),
                        mode == BoundMode::kPerfect ? "" : fixed(row.theta_upper_r, kDecimals)});
    }
  };
  emit("perfect", BoundMode::kPerfect, last_feasible_radius(n, p, k.theta_min, BoundMode::kPerfect));
  emit("perfect", BoundMode::kPerfect, perfect_radius_bound(n, p, *k.delta_sup).r_pow_max);
  emit("quasiperfect", BoundMode::kQuasiPerfect, last_feasible_radius(n, p, k.theta_min, BoundMode::kQuasiPerfect));
  emit("quasiperfect", BoundMode::kQuasiPerfect,
       last_feasible_radius(n, p, k.theta_min, BoundMode::kQuasiPerfect, BoundColumn::kPackingRadius));
  return t;
}

Table table2() {
  SearchQuery q;
  q.n = 2;
  q.p = 2;
  q.volume_min = 24;
  q.volume_max = 24;
  q.t_max = kUnboundedT;
  q.dedupe = true;
  SearchOptions options;
  options.jobs = 1;
  const SearchReport report = run_search(q, options);
  Table t;
  t.header = {"basis",         "t",       "r_pow",    "r",           "r_real",        "R_pow",
              "R",             "R_real",  "disc_pack_density",       "disc_pack_density_value",
              "pack_density_real",        "disc_cover_density",      "disc_cover_density_value",
              "cover_density_real"};
  for (const SearchHit& h : report.hits) {
    const CodeAnalysis& a = h.analysis;
    t.rows.push_back({to_compact_string(h.basis.rows()), std::to_string(a.t), std::to_string(a.r_pow.s),
                      fixed(radius_value(2, a.r_pow), kDecimals), fixed(a.real_pack_radius, kDecimals),
                      std::to_string(a.R_pow.s), fixed(radius_value(2, a.R_pow), kDecimals),
                      fixed(*a.real_cover_radius, kDecimals), to_string(a.disc_pack_density_exact),
                      fixed(a.disc_pack_density, kDecimals), fixed(a.real_pack_density, kDecimals),
                      to_string(a.disc_cover_density_exact), fixed(a.disc_cover_density, kDecimals),
                      fixed(*a.real_cover_density, kDecimals)});
  }
  return t;
}

Table table3() {
  Table t;
  t.header = {"r", "min_p"};
  for (Int r = 2; r <= 14; ++r) t.rows.push_back({std::to_string(r), std::to_string(min_p_threshold_A(r))});
  return t;
}

Table table4() {
  Table t;
  t.header = {"r", "p_values"};
  for (Int r = 3; r <= 14; ++r) {
    std::string values;
    for (int p : p_range_B(r)) values += (values.empty() ? "" : " ") + std::to_string(p);
    t.rows.push_back({std::to_string(r), values});
  }
  return t;
}

}  // namespace

Table cmd_tables(const std::string& which) {
  if (which == "table1") return table1();
  if (which == "table2") return table2();
  if (which == "table3") return table3();
  if (which == "table4") return table4();
  throw InvalidArgument("--which must be one of table1, table2, table3, table4");
}

}  // namespace qpcodes::cli
