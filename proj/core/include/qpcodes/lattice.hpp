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

#ifndef QPCODES_LATTICE_HPP_
#define QPCODES_LATTICE_HPP_

// Full-rank sublattices of Z^n (1 <= n <= 4) with exact integer arithmetic.
//
// Bases are row-generator matrices: the lattice is { x B : x in Z^n }. The
// canonical storage form is the row-style Hermite normal form: upper
// triangular, positive diagonal d_1..d_n, and 0 <= entry(i, j) < d_j above
// the diagonal. Two bases generate the same lattice iff their HNFs agree.
//
// Arithmetic runs on checked 64-bit integers; when an intermediate overflows,
// HNF, determinant and adjugate computations are redone in arbitrary
// precision.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "qpcodes/exact_ball.hpp"
#include "qpcodes/integer.hpp"

namespace qpcodes {

inline constexpr int kMaxDim = 4;

class LatticeBasis {
 public:
  // Throws InvalidArgument for non-square input, DimensionUnsupported for
  // n outside [1, kMaxDim], SingularMatrix when det = 0.
  explicit LatticeBasis(IntMatrix rows);
  static LatticeBasis from_rows(const std::vector<std::vector<Int>>& rows);

  int dim() const { return rows_.rows(); }
  const IntMatrix& rows() const { return rows_; }
  // |det B|
  Int det() const { return det_; }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  IntMatrix rows_;
  Int det_ = 0;
};

class HnfBasis {
 public:
  // Validates the HNF constraints; throws InvalidArgument otherwise.
  static HnfBasis from_rows(IntMatrix rows);

  int dim() const { return rows_.rows(); }
  const IntMatrix& rows() const { return rows_; }
  Int det() const { return det_; }
  Int diag(int j) const { return rows_(j, j); }
  Int entry(int i, int j) const { return rows_(i, j); }
  LatticeBasis basis() const { return LatticeBasis(rows_); }

  bool contains(std::span<const Int> v) const;

  friend bool operator==(const HnfBasis& a, const HnfBasis& b) { return a.rows_ == b.rows_; }
  friend std::strong_ordering operator<=>(const HnfBasis& a, const HnfBasis& b) { return a.rows_ <=> b.rows_; }

 private:
  HnfBasis(IntMatrix rows, Int det) : rows_(std::move(rows)), det_(det) {}
  friend HnfBasis hnf_from_index(std::span<const Int> diag, Int index);
  friend HnfBasis hnf(const LatticeBasis& b);

  IntMatrix rows_;
  Int det_ = 0;
};

// Signed determinant; exact.
Int determinant(const IntMatrix& m);

HnfBasis hnf(const LatticeBasis& b);

// Adj with B * Adj = det(B) * I (signed det).
IntMatrix adjugate(const LatticeBasis& b);

// Maps a point to its coset of the lattice in Z^n: coordinate j is reduced
// modulo d_j after triangular elimination with the HNF rows. The mixed-radix
// index (first coordinate most significant) lies in [0, det).
class CosetLabeler {
 public:
  explicit CosetLabeler(const HnfBasis& h);
  CosetLabeler(int n, std::span<const Int> hnf_row_major);

  int dim() const { return n_; }
  Int modulus() const { return det_; }

  Int index(std::span<const Int> x) const {
    std::array<Int, kMaxDim> v{};
    for (int j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
    Int idx = 0;
    for (int j = 0; j < n_; ++j) {
      const Int d = h_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
      const Int xj = v[static_cast<std::size_t>(j)];
      Int q = xj;
      Int r = 0;
      if (d != 1) {
        q = floor_div(xj, d);
        r = xj - q * d;
      }
      if (q != 0) {
        for (int k = j + 1; k < n_; ++k) v[static_cast<std::size_t>(k)] -= q * h_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      }
      idx = idx * d + r;
    }
    return idx;
  }

  std::vector<Int> residues(std::span<const Int> x) const;

 private:
  int n_ = 0;
  Int det_ = 1;
  std::array<std::array<Int, kMaxDim>, kMaxDim> h_{};
};

// Ordered factorizations d_1 * ... * d_n = m.
std::vector<std::vector<Int>> diagonal_factorizations(int n, Int m);

// Number of HNF matrices with the given diagonal: prod_j d_j^(j).
Int off_diagonal_count(std::span<const Int> diag);

// The index-th HNF matrix (row-major lexicographic order of the entries
// above the diagonal) with the given diagonal.
HnfBasis hnf_from_index(std::span<const Int> diag, Int index);

void for_each_sublattice(int n, Int m, const std::function<void(const HnfBasis&)>& visit);

// Every sublattice of Z^n of index m, once each, as HNF bases.
std::vector<HnfBasis> enumerate_sublattices(int n, Int m);

// Coordinate permutation composed with sign changes: the image of x has
// coordinate j equal to sign[j] * x[perm[j]].
struct SignedPermutation {
  std::array<int, kMaxDim> perm{};
  std::array<int, kMaxDim> sign{};
  int n = 0;

  std::vector<Int> apply(std::span<const Int> x) const;
  IntMatrix apply_rows(const IntMatrix& rows) const;
};

// All 2^n * n! signed permutations of R^n.
std::vector<SignedPermutation> signed_permutations(int n);

// Lexicographically smallest HNF over all signed-permutation images.
HnfBasis canonical_congruence_form(const LatticeBasis& b);

// min over nonzero lattice vectors v of sum |v_i|^p.
PowRadius shortest_vector_pow(const LatticeBasis& b, int p);

// One point per coset: the box {0..d_1-1} x ... x {0..d_n-1}.
PointList coset_representatives(const HnfBasis& h);

// min over lattice points v of sum |x_i - v_i|^p.
PowRadius closest_lattice_distance_pow(const LatticeBasis& b, int p, std::span<const Int> x);

}  // namespace qpcodes

#endif  // QPCODES_LATTICE_HPP_
