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

#include "qpcodes/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace qpcodes {
namespace {

// Arithmetic policies: checked 64-bit (throws Overflow) or arbitrary precision.
struct CheckedOps {
  using T = Int;
  static T add(T a, T b) { return checked_add(a, b); }
  static T sub(T a, T b) { return checked_sub(a, b); }
  static T mul(T a, T b) { return checked_mul(a, b); }
  static T div_trunc(T a, T b) { return a / b; }
  static T div_floor(T a, T b) { return floor_div(a, b); }
};

struct BigOps {
  using T = BigInt;
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T div_trunc(const T& a, const T& b) { return a / b; }
  static T div_floor(const T& a, const T& b) {
    T q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
    return q;
  }
};

template <class T>
using Rows = std::vector<std::vector<T>>;

template <class T>
Rows<T> to_rows_of(const IntMatrix& m) {
  Rows<T> out(static_cast<std::size_t>(m.rows()), std::vector<T>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = T(m(i, j));
  }
  return out;
}

template <class Ops>
typename Ops::T bareiss_det(Rows<typename Ops::T> a) {
  using T = typename Ops::T;
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return T(0);
      std::swap(a[k], a[pivot]);
      sign = T(0) - sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = Ops::div_trunc(Ops::sub(Ops::mul(a[i][j], a[k][k]), Ops::mul(a[i][k], a[k][j])), prev);
      }
    }
    prev = a[k][k];
  }
  return Ops::mul(sign, a[n - 1][n - 1]);
}

template <class Ops>
Rows<typename Ops::T> hnf_rows(Rows<typename Ops::T> a) {
  using T = typename Ops::T;
  const std::size_t n = a.size();
  auto axpy = [&](std::vector<T>& dst, const T& q, const std::vector<T>& src) {
    for (std::size_t k = 0; k < n; ++k) dst[k] = Ops::sub(dst[k], Ops::mul(q, src[k]));
  };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      while (a[i][j] != 0) {
        T q = Ops::div_trunc(a[j][j], a[i][j]);
        axpy(a[j], q, a[i]);
        std::swap(a[j], a[i]);
      }
    }
    if (a[j][j] == 0) throw SingularMatrix();
    if (a[j][j] < 0) {
      for (auto& v : a[j]) v = T(0) - v;
    }
    for (std::size_t i = 0; i < j; ++i) {
      T q = Ops::div_floor(a[i][j], a[j][j]);
      if (q != 0) axpy(a[i], q, a[j]);
    }
  }
  return a;
}

Int to_int(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Int>::max()) || v < BigInt(std::numeric_limits<Int>::min())) throw Overflow();
  return static_cast<Int>(v);
}

IntMatrix hnf_matrix(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  try {
    auto rows = hnf_rows<CheckedOps>(to_rows_of<Int>(m));
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) out(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  } catch (const Overflow&) {
    auto rows = hnf_rows<BigOps>(to_rows_of<BigInt>(m));
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) out(i, j) = to_int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    throw DimensionUnsupported("dimension " + std::to_string(n) + " outside supported range 1.." + std::to_string(kMaxDim));
  }
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

// Pairwise integer size reduction in the Euclidean inner product. Only used
// to seed exact searches with short vectors.
IntMatrix pairwise_reduced(const IntMatrix& rows) {
  IntMatrix b = rows;
  const int n = b.rows();
  bool changed = true;
  int guard = 0;
  while (changed && guard++ < 1000) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Int nj = dot(b.row(j), b.row(j));
        const Int ij = dot(b.row(i), b.row(j));
        // q = round(ij / nj)
        const Int q = floor_div(2 * ij + nj, 2 * nj);
        if (q == 0) continue;
        std::vector<Int> cand(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) cand[static_cast<std::size_t>(k)] = checked_sub(b(i, k), checked_mul(q, b(j, k)));
        if (dot(cand, cand) < dot(b.row(i), b.row(i))) {
          for (int k = 0; k < n; ++k) b(i, k) = cand[static_cast<std::size_t>(k)];
          changed = true;
        }
      }
    }
  }
  return b;
}

// Visits every lattice vector v = u H with sum |v_j - c_j|^p <= bound. The
// visitor may lower the bound; the search prunes against the current value.
template <class Visit>
void enumerate_near(const HnfBasis& h, int p, std::span<const Int> center, Int& bound, Visit&& visit) {
  const int n = h.dim();
  std::array<std::array<Int, kMaxDim>, kMaxDim + 1> acc{};  // acc[j][k]: sum_{i<j} u_i H_ik
  std::array<Int, kMaxDim> v{};
  auto rec = [&](auto&& self, int j, Int used) -> void {
    if (j == n) {
      visit(std::span<const Int>(v.data(), static_cast<std::size_t>(n)), used);
      return;
    }
    const Int budget = bound - used;
    if (budget < 0) return;
    const Int m = iroot_floor(budget, p);
    const Int d = h.diag(j);
    const Int w = acc[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    const Int c = center[static_cast<std::size_t>(j)];
    // |w + u d - c| <= m
    const Int lo = -floor_div(-(c - m - w), d);
    const Int hi = floor_div(c + m - w, d);
    for (Int u = lo; u <= hi; ++u) {
      const Int vj = w + u * d;
      const Int diff = vj - c;
      const Int cost = ipow(diff < 0 ? -diff : diff, p);
      if (used + cost > bound) continue;
      v[static_cast<std::size_t>(j)] = vj;
      for (int k = j + 1; k < n; ++k) {
        acc[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(k)] =
            acc[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] + u * h.entry(j, k);
      }
      self(self, j + 1, used + cost);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

LatticeBasis::LatticeBasis(IntMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() != rows_.cols()) throw InvalidArgument("basis must be square");
  check_dim(rows_.rows());
  Int d = determinant(rows_);
  if (d == 0) throw SingularMatrix();
  det_ = d < 0 ? -d : d;
}

LatticeBasis LatticeBasis::from_rows(const std::vector<std::vector<Int>>& rows) {
  return LatticeBasis(IntMatrix::from_rows(rows));
}

HnfBasis HnfBasis::from_rows(IntMatrix rows) {
  if (rows.rows() != rows.cols()) throw InvalidArgument("basis must be square");
  check_dim(rows.rows());
  const int n = rows.rows();
  Int det = 1;
  for (int i = 0; i < n; ++i) {
    if (rows(i, i) <= 0) throw InvalidArgument("HNF diagonal must be positive");
    det = checked_mul(det, rows(i, i));
    for (int j = 0; j < n; ++j) {
      if (j < i && rows(i, j) != 0) throw InvalidArgument("HNF must be upper triangular");
      if (j > i && (rows(i, j) < 0 || rows(i, j) >= rows(j, j))) {
        throw InvalidArgument("HNF entries above the diagonal must lie in [0, d_j)");
      }
    }
  }
  return HnfBasis(std::move(rows), det);
}

bool HnfBasis::contains(std::span<const Int> v) const { return CosetLabeler(*this).index(v) == 0; }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  try {
    return bareiss_det<CheckedOps>(to_rows_of<Int>(m));
  } catch (const Overflow&) {
    return to_int(bareiss_det<BigOps>(to_rows_of<BigInt>(m)));
  }
}

HnfBasis hnf(const LatticeBasis& b) {
  IntMatrix rows = hnf_matrix(b.rows());
  return HnfBasis(std::move(rows), b.det());
}

IntMatrix adjugate(const LatticeBasis& b) {
  const int n = b.dim();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // adj(i, j) = (-1)^(i+j) * minor(j, i)
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = b.rows()(r, c);
        }
        ++mr;
      }
      const Int m = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? m : checked_sub(0, m);
    }
  }
  return adj;
}

CosetLabeler::CosetLabeler(const HnfBasis& h) : CosetLabeler(h.dim(), h.rows().data()) {}

CosetLabeler::CosetLabeler(int n, std::span<const Int> hnf_row_major) : n_(n) {
  check_dim(n);
  if (hnf_row_major.size() < static_cast<std::size_t>(n * n)) throw InvalidArgument("HNF entries shorter than n*n");
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(n), kMaxDim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      h_[i][j] = hnf_row_major[i * m + j];
    }
    det_ *= h_[i][i];
  }
}

std::vector<Int> CosetLabeler::residues(std::span<const Int> x) const {
  std::vector<Int> out(static_cast<std::size_t>(n_));
  Int idx = index(x);
  for (int j = n_ - 1; j >= 0; --j) {
    const Int d = h_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(j)] = idx % d;
    idx /= d;
  }
  return out;
}

std::vector<std::vector<Int>> diagonal_factorizations(int n, Int m) {
  check_dim(n);
  if (m < 1) throw InvalidArgument("volume must be >= 1");
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, int depth, Int rest) -> void {
    if (depth == n - 1) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (Int d = 1; d <= rest; ++d) {
      if (rest % d != 0) continue;
      cur.push_back(d);
      self(self, depth + 1, rest / d);
      cur.pop_back();
    }
  };
  rec(rec, 0, m);
  return out;
}

Int off_diagonal_count(std::span<const Int> diag) {
  Int count = 1;
  for (std::size_t j = 0; j < diag.size(); ++j) count = checked_mul(count, ipow(diag[j], static_cast<int>(j)));
  return count;
}

HnfBasis hnf_from_index(std::span<const Int> diag, Int index) {
  const int n = static_cast<int>(diag.size());
  check_dim(n);
  if (index < 0 || index >= off_diagonal_count(diag)) throw InvalidArgument("sublattice index out of range");
  IntMatrix rows(n, n);
  Int det = 1;
  for (int j = 0; j < n; ++j) {
    rows(j, j) = diag[static_cast<std::size_t>(j)];
    det = checked_mul(det, diag[static_cast<std::size_t>(j)]);
  }
  // Last entry in row-major order varies fastest.
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j > i; --j) {
      const Int d = diag[static_cast<std::size_t>(j)];
      rows(i, j) = index % d;
      index /= d;
    }
  }
  return HnfBasis(std::move(rows), det);
}

void for_each_sublattice(int n, Int m, const std::function<void(const HnfBasis&)>& visit) {
  for (const auto& diag : diagonal_factorizations(n, m)) {
    const Int count = off_diagonal_count(diag);
    for (Int k = 0; k < count; ++k) visit(hnf_from_index(diag, k));
  }
}

std::vector<HnfBasis> enumerate_sublattices(int n, Int m) {
  std::vector<HnfBasis> out;
  for_each_sublattice(n, m, [&](const HnfBasis& h) { out.push_back(h); });
  return out;
}

std::vector<Int> SignedPermutation::apply(std::span<const Int> x) const {
  std::vector<Int> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = sign[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
  }
  return out;
}

IntMatrix SignedPermutation::apply_rows(const IntMatrix& rows) const {
  IntMatrix out(rows.rows(), rows.cols());
  for (int i = 0; i < rows.rows(); ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = sign[static_cast<std::size_t>(j)] * rows(i, perm[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

std::vector<SignedPermutation> signed_permutations(int n) {
  check_dim(n);
  std::vector<SignedPermutation> out;
  std::array<int, kMaxDim> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      SignedPermutation t;
      t.n = n;
      t.perm = perm;
      for (int j = 0; j < n; ++j) t.sign[static_cast<std::size_t>(j)] = (mask >> j) & 1 ? -1 : 1;
      out.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return out;
}

HnfBasis canonical_congruence_form(const LatticeBasis& b) {
  std::optional<HnfBasis> best;
  for (const auto& t : signed_permutations(b.dim())) {
    HnfBasis candidate = hnf(LatticeBasis(t.apply_rows(b.rows())));
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return *best;
}

PowRadius shortest_vector_pow(const LatticeBasis& b, int p) {
  if (p < 1) throw InvalidArgument("exponent p must be >= 1");
  const HnfBasis h = hnf(b);
  const IntMatrix seed = pairwise_reduced(h.rows());
  Int bound = std::numeric_limits<Int>::max();
  for (int i = 0; i < seed.rows(); ++i) {
    try {
      bound = std::min(bound, norm_pow(seed.row(i), p));
    } catch (const Overflow&) {
    }
  }
  if (bound == std::numeric_limits<Int>::max()) throw Overflow();
  const std::vector<Int> zero(static_cast<std::size_t>(b.dim()), 0);
  enumerate_near(h, p, zero, bound, [&](std::span<const Int> v, Int cost) {
    if (cost > 0 && cost < bound) bound = cost;
    (void)v;
  });
  return PowRadius(bound);
}

PointList coset_representatives(const HnfBasis& h) {
  const int n = h.dim();
  PointList out(n);
  out.reserve(static_cast<std::size_t>(h.det()));
  std::vector<Int> x(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      out.push_back(x);
      return;
    }
    for (Int v = 0; v < h.diag(j); ++v) {
      x[static_cast<std::size_t>(j)] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

PowRadius closest_lattice_distance_pow(const LatticeBasis& b, int p, std::span<const Int> x) {
  if (p < 1) throw InvalidArgument("exponent p must be >= 1");
  const int n = b.dim();
  if (static_cast<int>(x.size()) != n) throw InvalidArgument("point dimension mismatch");
  const HnfBasis h = hnf(b);

  // Residual of x modulo the lattice by triangular elimination.
  std::vector<Int> r(x.begin(), x.end());
  for (int j = 0; j < n; ++j) {
    const Int q = floor_div(r[static_cast<std::size_t>(j)], h.diag(j));
    for (int k = j; k < n; ++k) r[static_cast<std::size_t>(k)] -= q * h.entry(j, k);
  }
  Int bound = norm_pow(r, p);

  // Babai rounding of r against a reduced basis gives a nearby lattice point.
  const IntMatrix red = pairwise_reduced(h.rows());
  std::array<std::array<double, kMaxDim + 1>, kMaxDim> sys{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sys[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<double>(red(j, i));
    sys[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = static_cast<double>(r[static_cast<std::size_t>(i)]);
  }
  bool ok = true;
  for (int c = 0; c < n && ok; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i) {
      if (std::abs(sys[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) > std::abs(sys[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)])) piv = i;
    }
    if (sys[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] == 0.0) {
      ok = false;
      break;
    }
    std::swap(sys[static_cast<std::size_t>(c)], sys[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      const double f = sys[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / sys[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
      for (int k = c; k <= n; ++k) sys[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= f * sys[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
  }
  if (ok) {
    std::vector<Int> cand = r;
    for (int i = 0; i < n; ++i) {
      const double coef = sys[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] / sys[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      const Int u = static_cast<Int>(std::llround(coef));
      for (int k = 0; k < n; ++k) cand[static_cast<std::size_t>(k)] -= u * red(i, k);
    }
    bound = std::min(bound, norm_pow(cand, p));
  }

  enumerate_near(h, p, x, bound, [&](std::span<const Int>, Int cost) {
    if (cost < bound) bound = cost;
  });
  return PowRadius(bound);
}

}  // namespace qpcodes
