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

#ifndef QPCODES_TESTS_SUPPORT_ORACLES_HPP_
#define QPCODES_TESTS_SUPPORT_ORACLES_HPP_

// Brute-force reference implementations. Deliberately naive and independent
// of the library: plain loops over boxes, no HNF, no coset labels.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

namespace qpcodes::oracle {

using I64 = std::int64_t;
using Vec = std::vector<I64>;
using Mat = std::vector<Vec>;

inline I64 absv(I64 v) { return v < 0 ? -v : v; }

inline I64 pw(I64 b, int p) {
  I64 r = 1;
  for (int i = 0; i < p; ++i) r *= b;
  return r;
}

inline I64 norm_p(const Vec& x, int p) {
  I64 s = 0;
  for (I64 v : x) s += pw(absv(v), p);
  return s;
}

// Largest k with k^p <= s.
inline I64 root_floor(I64 s, int p) {
  I64 k = 0;
  while (pw(k + 1, p) <= s) ++k;
  return k;
}

// Visits every point of the box [lo, hi]^n.
inline void for_box(int n, I64 lo, I64 hi, const std::function<void(const Vec&)>& f) {
  Vec x(static_cast<std::size_t>(n), lo);
  while (true) {
    f(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == hi) x[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

// Visits the points with l_inf norm exactly k.
inline void for_shell(int n, I64 k, const std::function<void(const Vec&)>& f) {
  for_box(n, -k, k, [&](const Vec& x) {
    I64 m = 0;
    for (I64 v : x) m = std::max(m, absv(v));
    if (m == k) f(x);
  });
}

inline I64 mu(int n, int p, I64 s) {
  const I64 k = root_floor(s, p);
  I64 count = 0;
  for_box(n, -k, k, [&](const Vec& x) { count += norm_p(x, p) <= s ? 1 : 0; });
  return count;
}

inline std::vector<I64> distance_set(int n, int p, I64 limit) {
  std::set<I64> out;
  const I64 k = root_floor(limit, p);
  for_box(n, 0, k, [&](const Vec& x) {
    const I64 v = norm_p(x, p);
    if (v <= limit) out.insert(v);
  });
  return {out.begin(), out.end()};
}

inline I64 det(const Mat& b) {
  const std::size_t n = b.size();
  if (n == 1) return b[0][0];
  I64 total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(b[r][j]);
      minor.push_back(row);
    }
    total += ((c % 2 == 0) ? 1 : -1) * b[0][c] * det(minor);
  }
  return total;
}

// v is in the row span of b over Z iff v * adj(b) is divisible by det(b).
inline bool member(const Mat& b, const Vec& v) {
  const std::size_t n = b.size();
  const I64 d = det(b);
  for (std::size_t j = 0; j < n; ++j) {
    Mat m = b;
    m[j] = v;  // Cramer: coefficient j = det(b with row j replaced by v) / det(b)
    if (det(m) % d != 0) return false;
  }
  return true;
}

inline I64 abs_det(const Mat& b) { return absv(det(b)); }

// Smallest s such that integer balls of radius s^(1/p) around 0 and lam meet.
inline I64 overlap_threshold(const Vec& lam, int p) {
  const int n = static_cast<int>(lam.size());
  I64 best = std::numeric_limits<I64>::max();
  Vec z(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Vec diff(z);
      for (int j = 0; j < n; ++j) diff[static_cast<std::size_t>(j)] -= lam[static_cast<std::size_t>(j)];
      best = std::min(best, std::max(norm_p(z, p), norm_p(diff, p)));
      return;
    }
    const I64 a = std::min<I64>(0, lam[static_cast<std::size_t>(i)]);
    const I64 b = std::max<I64>(0, lam[static_cast<std::size_t>(i)]);
    for (I64 v = a; v <= b; ++v) {
      z[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

// Largest element of the distance set whose balls around distinct lattice
// points are pairwise disjoint.
inline I64 packing_radius_pow(const Mat& b, int p) {
  const int n = static_cast<int>(b.size());
  const I64 d = abs_det(b);
  // d * e_1 is in the lattice, so the threshold is at most d^p. A vector on
  // the l_inf shell k has threshold at least ceil(k/2)^p.
  I64 limit = pw(d, p);
  for (I64 k = 1; k <= 2 * d && pw((k + 1) / 2, p) < limit; ++k) {
    for_shell(n, k, [&](const Vec& x) {
      if (pw((k + 1) / 2, p) >= limit || !member(b, x)) return;
      limit = std::min(limit, overlap_threshold(x, p));
    });
  }
  I64 best = 0;
  for (I64 s : distance_set(n, p, limit)) {
    if (s < limit) best = s;
  }
  return best;
}

// Distance^p from x to the nearest lattice point, by growing l_inf shells.
inline I64 closest_pow(const Mat& b, int p, const Vec& x) {
  const int n = static_cast<int>(x.size());
  I64 best = std::numeric_limits<I64>::max();
  for (I64 k = 0;; ++k) {
    if (best != std::numeric_limits<I64>::max() && pw(k, p) > best) return best;
    for_shell(n, k, [&](const Vec& z) {
      Vec y(x);
      for (int j = 0; j < n; ++j) y[static_cast<std::size_t>(j)] += z[static_cast<std::size_t>(j)];
      if (member(b, y)) best = std::min(best, norm_p(z, p));
    });
  }
}

// Max over all x in [0, det)^n of the distance^p to the lattice.
inline I64 covering_radius_pow(const Mat& b, int p) {
  const int n = static_cast<int>(b.size());
  const I64 d = abs_det(b);
  I64 worst = 0;
  for_box(n, 0, d - 1, [&](const Vec& x) { worst = std::max(worst, closest_pow(b, p, x)); });
  return worst;
}

inline I64 shortest_pow(const Mat& b, int p) {
  const int n = static_cast<int>(b.size());
  I64 best = pw(abs_det(b), p);
  for (I64 k = 1; pw(k, p) < best; ++k) {
    for_shell(n, k, [&](const Vec& x) {
      const I64 v = norm_p(x, p);
      if (v < best && member(b, x)) best = v;
    });
  }
  return best;
}

inline I64 sigma(I64 m) {
  I64 s = 0;
  for (I64 d = 1; d <= m; ++d)
    if (m % d == 0) s += d;
  return s;
}

// Number of index-m sublattices of Z^3: sum over d1 d2 d3 = m of d2 d3^2.
inline I64 sublattice_count_3(I64 m) {
  I64 total = 0;
  for (I64 d1 = 1; d1 <= m; ++d1) {
    if (m % d1 != 0) continue;
    for (I64 d2 = 1; d2 <= m / d1; ++d2) {
      if ((m / d1) % d2 != 0) continue;
      const I64 d3 = m / d1 / d2;
      total += d2 * d3 * d3;
    }
  }
  return total;
}

// All 2x2 upper-triangular bases (d1, a; 0, d2) with 0 <= a < d2.
inline std::vector<Mat> planar_hnf_bases(I64 m) {
  std::vector<Mat> out;
  for (I64 d1 = 1; d1 <= m; ++d1) {
    if (m % d1 != 0) continue;
    const I64 d2 = m / d1;
    for (I64 a = 0; a < d2; ++a) out.push_back({{d1, a}, {0, d2}});
  }
  return out;
}

}  // namespace qpcodes::oracle

#endif  // QPCODES_TESTS_SUPPORT_ORACLES_HPP_
