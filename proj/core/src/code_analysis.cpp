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

#include "qpcodes/code_analysis.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace qpcodes {
namespace {

// Sweeps ball points beyond this count are replaced by per-coset closest
// point searches.
constexpr Int kMaxSweepPoints = 4'000'000;

// Smallest power-of-two s with mu(s) > count.
PowRadius radius_exceeding(int n, int p, Int count) {
  Int s = 1;
  while (mu(n, p, PowRadius(s)) <= count) s = checked_mul(s, 2);
  return PowRadius(s);
}

// Saturates at the Int maximum; the sweep only uses it as a cap.
Int covering_upper_bound(const HnfBasis& h, int p) {
  Int total = 0;
  try {
    for (int j = 0; j < h.dim(); ++j) total = checked_add(total, ipow(h.diag(j) / 2, p));
  } catch (const Overflow&) {
    return std::numeric_limits<Int>::max();
  }
  return total;
}

PowRadius covering_radius_by_cvp(const HnfBasis& h, int p) {
  const LatticeBasis b = h.basis();
  const PointList reps = coset_representatives(h);
  PowRadius worst(0);
  for (std::size_t i = 0; i < reps.size(); ++i) worst = std::max(worst, closest_lattice_distance_pow(b, p, reps[i]));
  return worst;
}

}  // namespace

PowRadius packing_radius_pow(const HnfBasis& h, int p) {
  const int n = h.dim();
  const Int det = h.det();
  // Once the ball holds more than det points two of them share a coset.
  const NormOrderedBall ball = ball_points_by_norm(n, p, radius_exceeding(n, p, det));
  const CosetLabeler labeler(h);
  std::vector<char> seen(static_cast<std::size_t>(det), 0);
  Int last_complete = 0;
  for (std::size_t i = 0; i < ball.points.size(); ++i) {
    const Int level = ball.norms[i];
    if (i > 0 && level != ball.norms[i - 1]) last_complete = ball.norms[i - 1];
    char& slot = seen[static_cast<std::size_t>(labeler.index(ball.points[i]))];
    if (slot) return PowRadius(last_complete);
    slot = 1;
  }
  throw Error("packing radius sweep ended without a collision");
}

PowRadius covering_radius_pow(const HnfBasis& h, int p) {
  const int n = h.dim();
  const Int det = h.det();
  const Int upper = covering_upper_bound(h, p);
  const CosetLabeler labeler(h);
  // Grow the ball until its points meet every coset; the norm at which the
  // last coset is first reached is the covering radius.
  Int s = std::min(radius_exceeding(n, p, det - 1).s, upper);
  while (true) {
    if (mu(n, p, PowRadius(s)) > kMaxSweepPoints) return covering_radius_by_cvp(h, p);
    const NormOrderedBall ball = ball_points_by_norm(n, p, PowRadius(s));
    std::vector<char> seen(static_cast<std::size_t>(det), 0);
    Int covered = 0;
    for (std::size_t i = 0; i < ball.points.size(); ++i) {
      char& slot = seen[static_cast<std::size_t>(labeler.index(ball.points[i]))];
      if (!slot) {
        slot = 1;
        if (++covered == det) return PowRadius(ball.norms[i]);
      }
    }
    if (s >= upper) throw Error("covering sweep did not reach every coset");
    s = std::min(checked_mul(s, 4), upper);
  }
}

Int imperfection_degree(const HnfBasis& h, int p) {
  const PowRadius r = packing_radius_pow(h, p);
  const PowRadius R = covering_radius_pow(h, p);
  return distance_set(h.dim(), p, R).gap_count(r, R);
}

CodeAnalysis analyze(const LatticeBasis& b, int p) { return analyze(hnf(b), p); }

CodeAnalysis analyze(const HnfBasis& h, int p) {
  if (p < 1) throw InvalidArgument("exponent p must be >= 1");
  const int n = h.dim();
  const Int det = h.det();
  CodeAnalysis a(h, p);
  a.r_pow = packing_radius_pow(h, p);
  a.R_pow = covering_radius_pow(h, p);
  a.t = distance_set(n, p, a.R_pow).gap_count(a.r_pow, a.R_pow);
  a.mu_r = mu(n, p, a.r_pow);
  a.mu_R = mu(n, p, a.R_pow);
  a.disc_pack_density_exact = Rational(a.mu_r, det);
  a.disc_cover_density_exact = Rational(a.mu_R, det);
  a.disc_pack_density = static_cast<double>(a.mu_r) / static_cast<double>(det);
  a.disc_cover_density = static_cast<double>(a.mu_R) / static_cast<double>(det);

  const LatticeBasis basis = h.basis();
  const double volume = unit_ball_volume(n, p);
  a.shortest_pow = shortest_vector_pow(basis, p);
  a.real_pack_radius = radius_value(p, a.shortest_pow) / 2.0;
  a.real_pack_density = volume * std::pow(a.real_pack_radius, n) / static_cast<double>(det);
  if (n == 2 && p == 2) {
    a.real_cover_radius = real_covering_radius_2d_euclidean(basis);
    a.real_cover_density = volume * std::pow(*a.real_cover_radius, n) / static_cast<double>(det);
  }
  return a;
}

double real_covering_radius_2d_euclidean(const LatticeBasis& b) {
  if (b.dim() != 2) throw DimensionUnsupported("real covering radius is implemented for n = 2 only");
  std::array<Int, 2> u{b.rows()(0, 0), b.rows()(0, 1)};
  std::array<Int, 2> v{b.rows()(1, 0), b.rows()(1, 1)};
  auto dot = [](const std::array<Int, 2>& x, const std::array<Int, 2>& y) {
    return checked_add(checked_mul(x[0], y[0]), checked_mul(x[1], y[1]));
  };
  // Lagrange-Gauss reduction: |u| <= |v| and |u.v| <= |u|^2 / 2.
  if (dot(v, v) < dot(u, u)) std::swap(u, v);
  while (true) {
    const Int nu = dot(u, u);
    const Int q = floor_div(2 * dot(u, v) + nu, 2 * nu);
    v = {v[0] - q * u[0], v[1] - q * u[1]};
    if (dot(v, v) >= nu) break;
    std::swap(u, v);
  }
  // With u.v >= 0 the triangle {0, u, v} has no obtuse angle, so it is a
  // Delaunay triangle and its circumcenter is a deepest hole.
  if (dot(u, v) < 0) v = {-v[0], -v[1]};
  const std::array<Int, 2> w{v[0] - u[0], v[1] - u[1]};
  const double lu = std::sqrt(static_cast<double>(dot(u, u)));
  const double lv = std::sqrt(static_cast<double>(dot(v, v)));
  const double lw = std::sqrt(static_cast<double>(dot(w, w)));
  return lu * lv * lw / (2.0 * static_cast<double>(b.det()));
}

}  // namespace qpcodes
