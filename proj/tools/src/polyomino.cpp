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

#include <array>
#include <sstream>

#include "qpcodes/cli/cli.hpp"
#include "qpcodes/errors.hpp"

namespace qpcodes::cli {
namespace {

constexpr int kCell = 12;
constexpr std::array<const char*, 8> kPalette = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                                 "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};

}  // namespace

std::string cmd_polyomino(int p, const Rational& r, const std::optional<LatticeBasis>& basis) {
  if (basis && basis->dim() != 2) throw DimensionUnsupported("polyomino rendering is planar: --basis must be 2x2");
  if (r < 0) throw InvalidArgument("--r must be nonnegative");
  const PowRadius s = pow_radius_of(p, r);
  const PointList ball = ball_points(2, p, s);
  const Int reach = iroot_floor(s.s, p);
  // Translates are drawn inside [-half, half]^2.
  const Int half = basis ? 3 * reach + 3 : reach;

  std::vector<std::array<Int, 2>> centers;
  if (basis) {
    const HnfBasis h = hnf(*basis);
    for (Int x = -half - reach; x <= half + reach; ++x) {
      for (Int y = -half - reach; y <= half + reach; ++y) {
        const std::array<Int, 2> v{x, y};
        if (h.contains(v)) centers.push_back(v);
      }
    }
  } else {
    centers.push_back({0, 0});
  }

  const Int side = (2 * half + 1) * kCell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  os << "<title>B_" << p << "^2(" << to_string(r) << "), " << ball.size() << " points";
  if (basis) os << ", lattice " << to_compact_string(basis->rows());
  os << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const bool origin = centers[c][0] == 0 && centers[c][1] == 0;
    const char* fill = basis ? kPalette[c % kPalette.size()] : kPalette[0];
    os << "<g fill=\"" << fill << "\" stroke=\"#222222\" stroke-width=\"" << (origin ? 1.5 : 0.5) << "\">\n";
    for (std::size_t i = 0; i < ball.size(); ++i) {
      const Int x = centers[c][0] + ball[i][0];
      const Int y = centers[c][1] + ball[i][1];
      if (x < -half || x > half || y < -half || y > half) continue;
      // SVG y grows downwards.
      os << "<rect x=\"" << (x + half) * kCell << "\" y=\"" << (half - y) * kCell << "\" width=\"" << kCell
         << "\" height=\"" << kCell << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qpcodes::cli
