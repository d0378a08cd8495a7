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

#ifndef QPCODES_CODE_ANALYSIS_HPP_
#define QPCODES_CODE_ANALYSIS_HPP_

#include <optional>
#include <utility>

#include "qpcodes/exact_ball.hpp"
#include "qpcodes/lattice.hpp"

namespace qpcodes {

// Packing/covering figures of a lattice code in Z^n under l_p.
struct CodeAnalysis {
  CodeAnalysis(HnfBasis b, int exponent) : basis(std::move(b)), p(exponent) {}

  HnfBasis basis;
  int p = 2;
  PowRadius r_pow;  // packing radius r_p, as r^p
  PowRadius R_pow;  // covering radius R_p, as R^p
  Int t = 0;        // degree of imperfection
  Int mu_r = 0;
  Int mu_R = 0;
  Rational disc_pack_density_exact;
  Rational disc_cover_density_exact;
  double disc_pack_density = 0;
  double disc_cover_density = 0;
  PowRadius shortest_pow;  // min norm^p of a nonzero lattice vector
  double real_pack_radius = 0;
  double real_pack_density = 0;
  std::optional<double> real_cover_radius;
  std::optional<double> real_cover_density;

  int dim() const { return basis.dim(); }
  Int det() const { return basis.det(); }
};

PowRadius packing_radius_pow(const HnfBasis& b, int p);
PowRadius covering_radius_pow(const HnfBasis& b, int p);
Int imperfection_degree(const HnfBasis& b, int p);

CodeAnalysis analyze(const LatticeBasis& b, int p);
CodeAnalysis analyze(const HnfBasis& b, int p);

// Real (continuous) covering radius of a planar lattice in the Euclidean
// metric: the circumradius of a non-obtuse Delaunay triangle spanned by a
// Lagrange-Gauss reduced basis. Throws DimensionUnsupported for n != 2.
double real_covering_radius_2d_euclidean(const LatticeBasis& b);

}  // namespace qpcodes

#endif  // QPCODES_CODE_ANALYSIS_HPP_
