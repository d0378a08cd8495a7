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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qpcodes/lattice.hpp"
#include "test_helpers.hpp"

namespace qpcodes {
namespace {

using testing::to_oracle;

// Random nonsingular n x n matrix with entries in [-range, range].
IntMatrix random_basis(std::mt19937_64& rng, int n, Int range) {
  std::uniform_int_distribution<Int> dist(-range, range);
  for (;;) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
    }
    if (determinant(m) != 0) return m;
  }
}

// Product of elementary row operations: swaps, negations, row additions.
IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<Int> coeff(-3, 3);
  for (int step = 0; step < 8; ++step) {
    IntMatrix e = IntMatrix::identity(n);
    const int i = pick(rng);
    const int j = pick(rng);
    switch (op(rng)) {
      case 0:
        e(i, i) = 0;
        e(j, j) = 0;
        e(i, j) = 1;
        e(j, i) = 1;
        if (i == j) e(i, i) = 1;
        break;
      case 1:
        e(i, i) = -1;
        break;
      default:
        if (i != j) e(i, j) = coeff(rng);
        break;
    }
    u = e * u;
  }
  return u;
}

TEST(LatticeProperties, HnfIsIdempotentAndBasisInvariant) {
  std::mt19937_64 rng(20261018);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const IntMatrix b = random_basis(rng, n, 9);
      const HnfBasis h = hnf(LatticeBasis(b));
      EXPECT_EQ(hnf(h.basis()), h);
      EXPECT_EQ(h.det(), std::abs(determinant(b)));
      const IntMatrix u = random_unimodular(rng, n);
      ASSERT_EQ(std::abs(determinant(u)), 1);
      EXPECT_EQ(hnf(LatticeBasis(u * b)), h);
    }
  }
}

TEST(LatticeProperties, HnfMembershipMatchesBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> coord(-30, 30);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix b = random_basis(rng, n, 6);
      const HnfBasis h = hnf(LatticeBasis(b));
      const auto ob = to_oracle(b);
      for (int k = 0; k < 50; ++k) {
        std::vector<Int> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = coord(rng);
        EXPECT_EQ(h.contains(v), oracle::member(ob, oracle::Vec(v.begin(), v.end())));
      }
    }
  }
}

TEST(LatticeProperties, PlanarSublatticeCountIsSigma) {
  for (Int m = 1; m <= 300; ++m) {
    Int count = 0;
    for_each_sublattice(2, m, [&](const HnfBasis&) { ++count; });
    EXPECT_EQ(count, oracle::sigma(m)) << m;
  }
}

TEST(LatticeProperties, SpatialSublatticeCountMatchesDivisorFormula) {
  for (Int m = 1; m <= 60; ++m) {
    Int count = 0;
    for_each_sublattice(3, m, [&](const HnfBasis& h) {
      EXPECT_EQ(h.det(), m);
      ++count;
    });
    EXPECT_EQ(count, oracle::sublattice_count_3(m)) << m;
  }
}

TEST(LatticeProperties, EnumeratedSublatticesAreDistinctLattices) {
  for (Int m : {12, 30, 36}) {
    const auto all = enumerate_sublattices(3, m);
    std::set<HnfBasis> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(LatticeProperties, CanonicalFormInvariantUnderSignedPermutations) {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 3; ++n) {
    const auto transforms = signed_permutations(n);
    for (int trial = 0; trial < 60; ++trial) {
      const LatticeBasis b(random_basis(rng, n, 7));
      const HnfBasis c = canonical_congruence_form(b);
      for (const auto& t : transforms) {
        EXPECT_EQ(canonical_congruence_form(LatticeBasis(t.apply_rows(b.rows()))), c);
      }
    }
  }
}

TEST(LatticeProperties, ShortestVectorMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      for (int trial = 0; trial < 25; ++trial) {
        const LatticeBasis b(random_basis(rng, n, n == 2 ? 8 : 4));
        const PowRadius s = shortest_vector_pow(b, p);
        EXPECT_EQ(s.s, oracle::shortest_pow(to_oracle(b.rows()), p));
        EXPECT_TRUE(is_representable(n, p, s));
      }
    }
  }
}

TEST(LatticeProperties, ClosestDistanceMatchesBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> coord(-20, 20);
  for (int n = 2; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      for (int trial = 0; trial < 15; ++trial) {
        const LatticeBasis b(random_basis(rng, n, n == 2 ? 7 : 3));
        const auto ob = to_oracle(b.rows());
        for (int k = 0; k < 10; ++k) {
          oracle::Vec x(static_cast<std::size_t>(n));
          for (auto& v : x) v = coord(rng);
          const std::vector<Int> xi(x.begin(), x.end());
          EXPECT_EQ(closest_lattice_distance_pow(b, p, xi).s, oracle::closest_pow(ob, p, x));
        }
      }
    }
  }
}

}  // namespace
}  // namespace qpcodes
