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

#include <set>
#include <vector>

#include "qpcodes/lattice.hpp"
#include "test_helpers.hpp"

namespace qpcodes {
namespace {

using testing::basis;
using testing::canon;
using testing::hnf_of;

TEST(Lattice, BasisValidation) {
  EXPECT_EQ(basis("5,11;13,-1").det(), 148);
  EXPECT_EQ(basis("1,5;0,24").det(), 24);
  EXPECT_THROW(basis("1,2;2,4"), SingularMatrix);
  EXPECT_THROW(LatticeBasis(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}})), InvalidArgument);
  EXPECT_THROW(LatticeBasis(IntMatrix::identity(5)), DimensionUnsupported);
  EXPECT_THROW(LatticeBasis{IntMatrix{}}, DimensionUnsupported);
}

TEST(Lattice, Determinant) {
  EXPECT_EQ(determinant(parse_matrix("5,11;13,1")), -138);
  EXPECT_EQ(determinant(parse_matrix("1,0,5;0,1,41;0,0,105")), 105);
  EXPECT_EQ(determinant(parse_matrix("2,1,0,0;0,3,1,0;0,0,5,1;1,0,0,7")), 209);
}

TEST(Lattice, HnfExamples) {
  EXPECT_EQ(hnf_of("3,5;6,-1").rows(), parse_matrix("3,5;0,11"));
  EXPECT_EQ(hnf_of("1,0;0,1").rows(), IntMatrix::identity(2));
  EXPECT_EQ(hnf_of("0,24;1,4").rows(), parse_matrix("1,4;0,24"));
  EXPECT_EQ(hnf_of("5,11;13,1").rows(), parse_matrix("1,85;0,138"));
  EXPECT_EQ(hnf_of("1,-19;0,24").rows(), parse_matrix("1,5;0,24"));
}

TEST(Lattice, HnfSatisfiesNormalFormConstraints) {
  const HnfBasis h = hnf_of("2,3,5;7,-1,4;0,6,9");
  Int prod = 1;
  for (int i = 0; i < 3; ++i) {
    EXPECT_GT(h.diag(i), 0);
    prod *= h.diag(i);
    for (int j = 0; j < i; ++j) EXPECT_EQ(h.entry(i, j), 0);
    for (int j = i + 1; j < 3; ++j) {
      EXPECT_GE(h.entry(i, j), 0);
      EXPECT_LT(h.entry(i, j), h.diag(j));
    }
  }
  EXPECT_EQ(prod, h.det());
  EXPECT_EQ(h.det(), std::abs(determinant(parse_matrix("2,3,5;7,-1,4;0,6,9"))));
}

TEST(Lattice, HnfFromRowsValidates) {
  EXPECT_NO_THROW(HnfBasis::from_rows(parse_matrix("1,5;0,24")));
  EXPECT_THROW(HnfBasis::from_rows(parse_matrix("1,24;0,24")), InvalidArgument);
  EXPECT_THROW(HnfBasis::from_rows(parse_matrix("1,0;1,24")), InvalidArgument);
  EXPECT_THROW(HnfBasis::from_rows(parse_matrix("-1,0;0,24")), InvalidArgument);
}

TEST(Lattice, HnfSurvivesLargeIntermediateEntries) {
  const Int big = Int{1} << 30;
  const IntMatrix m = IntMatrix::from_rows({{1, big}, {big, 3 * big + 1}});
  const HnfBasis h = hnf(LatticeBasis(m));
  EXPECT_EQ(h.det(), big * big - 3 * big - 1);
  EXPECT_EQ(h.diag(0) * h.diag(1), h.det());
  EXPECT_EQ(hnf(h.basis()), h);
}

TEST(Lattice, AdjugateExamples) {
  EXPECT_EQ(adjugate(basis("1,0;0,1")), IntMatrix::identity(2));
  EXPECT_EQ(adjugate(basis("1,5;0,24")), parse_matrix("24,-5;0,1"));
  EXPECT_EQ(adjugate(basis("2,0;0,12")), parse_matrix("12,0;0,2"));
  const LatticeBasis b = basis("2,3,5;7,-1,4;0,6,9");
  const Int d = determinant(b.rows());
  const IntMatrix prod = b.rows() * adjugate(b);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(prod(i, j), i == j ? d : 0);
  }
}

TEST(Lattice, MembershipAndLabels) {
  const HnfBasis h = hnf_of("5,11;13,1");
  const std::vector<Int> row0 = {5, 11};
  const std::vector<Int> combo = {5 * 3 - 13 * 2, 11 * 3 - 2};
  const std::vector<Int> off = {1, 0};
  EXPECT_TRUE(h.contains(row0));
  EXPECT_TRUE(h.contains(combo));
  EXPECT_FALSE(h.contains(off));
  const CosetLabeler labeler(h);
  EXPECT_EQ(labeler.modulus(), 138);
  EXPECT_EQ(labeler.index(row0), 0);
  std::set<Int> seen;
  const PointList reps = coset_representatives(h);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Int idx = labeler.index(reps[i]);
    EXPECT_GE(idx, 0);
    EXPECT_LT(idx, 138);
    seen.insert(idx);
  }
  EXPECT_EQ(seen.size(), 138U);
  EXPECT_THROW(CosetLabeler(2, std::vector<Int>{1, 2, 3}), InvalidArgument);
}

TEST(Lattice, DiagonalFactorizationsAndCounts) {
  EXPECT_EQ(diagonal_factorizations(2, 6).size(), 4U);
  EXPECT_EQ(diagonal_factorizations(3, 4).size(), 6U);
  const std::vector<Int> diag = {2, 3, 4};
  EXPECT_EQ(off_diagonal_count(diag), 3 * 16);
  const std::vector<Int> d2 = {1, 24};
  EXPECT_EQ(hnf_from_index(d2, 5).rows(), parse_matrix("1,5;0,24"));
  EXPECT_THROW(hnf_from_index(d2, 24), InvalidArgument);
}

TEST(Lattice, EnumerateSublatticesExamples) {
  EXPECT_EQ(enumerate_sublattices(2, 24).size(), 60U);
  const auto unit = enumerate_sublattices(2, 1);
  ASSERT_EQ(unit.size(), 1U);
  EXPECT_EQ(unit[0].rows(), IntMatrix::identity(2));
  EXPECT_EQ(enumerate_sublattices(3, 4).size(), 35U);
  EXPECT_EQ(enumerate_sublattices(1, 7).size(), 1U);
  std::set<HnfBasis> distinct;
  for (const auto& h : enumerate_sublattices(2, 24)) {
    EXPECT_EQ(h.det(), 24);
    distinct.insert(h);
  }
  EXPECT_EQ(distinct.size(), 60U);
}

TEST(Lattice, SignedPermutationCounts) {
  EXPECT_EQ(signed_permutations(1).size(), 2U);
  EXPECT_EQ(signed_permutations(2).size(), 8U);
  EXPECT_EQ(signed_permutations(3).size(), 48U);
  EXPECT_EQ(signed_permutations(4).size(), 384U);
}

TEST(Lattice, CanonicalFormExamples) {
  EXPECT_EQ(canon("1,19;0,24"), canon("1,5;0,24"));
  EXPECT_EQ(canon("4,0;0,6"), canon("6,0;0,4"));
  EXPECT_NE(canon("1,5;0,24"), canon("1,4;0,24"));
  for (const auto& t : signed_permutations(2)) {
    EXPECT_EQ(canonical_congruence_form(LatticeBasis(t.apply_rows(parse_matrix("1,5;0,24")))), canon("1,5;0,24"));
  }
  // Family A at r = 3 and the listed (1,6;0,33) are the same code up to congruence.
  EXPECT_EQ(canon("3,5;6,-1"), canon("1,6;0,33"));
}

TEST(Lattice, ShortestVectorExamples) {
  EXPECT_EQ(shortest_vector_pow(basis("1,0;0,1"), 2), PowRadius(1));
  EXPECT_EQ(shortest_vector_pow(basis("1,4;0,24"), 2), PowRadius(17));
  EXPECT_EQ(shortest_vector_pow(basis("1,5;0,24"), 2), PowRadius(26));
  EXPECT_EQ(shortest_vector_pow(basis("1,5;0,24"), 1), PowRadius(6));
}

TEST(Lattice, CosetRepresentativesExamples) {
  EXPECT_EQ(coset_representatives(hnf_of("1,0;0,1")).size(), 1U);
  const PointList reps = coset_representatives(hnf_of("1,5;0,24"));
  ASSERT_EQ(reps.size(), 24U);
  const HnfBasis h = hnf_of("1,5;0,24");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EXPECT_EQ(reps[i][0], 0);
    EXPECT_EQ(reps[i][1], static_cast<Int>(i));
    for (std::size_t j = 0; j < i; ++j) {
      const std::vector<Int> diff = {reps[i][0] - reps[j][0], reps[i][1] - reps[j][1]};
      EXPECT_FALSE(h.contains(diff));
    }
  }
}

TEST(Lattice, ClosestLatticeDistanceExamples) {
  const std::vector<Int> in = {18, 12};
  EXPECT_EQ(closest_lattice_distance_pow(basis("5,11;13,1"), 2, in), PowRadius(0));
  const std::vector<Int> mid = {0, 12};
  EXPECT_EQ(closest_lattice_distance_pow(basis("1,0;0,24"), 2, mid), PowRadius(144));
  PowRadius deepest(0);
  const HnfBasis h = hnf_of("5,11;13,1");
  const PointList reps = coset_representatives(h);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    deepest = std::max(deepest, closest_lattice_distance_pow(h.basis(), 2, reps[i]));
  }
  EXPECT_EQ(deepest, PowRadius(50));
}

}  // namespace
}  // namespace qpcodes
