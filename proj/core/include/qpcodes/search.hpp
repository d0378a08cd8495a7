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

#ifndef QPCODES_SEARCH_HPP_
#define QPCODES_SEARCH_HPP_

// Exhaustive search for perfect, quasi-perfect and t-imperfect lattice
// codes over every sublattice of Z^n with volume in a given range.

#include <compare>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpcodes/code_analysis.hpp"

namespace qpcodes {

inline constexpr Int kUnboundedT = std::numeric_limits<Int>::max();

struct SearchQuery {
  int n = 2;
  int p = 2;
  Int volume_min = 1;
  Int volume_max = 1;
  Int t_max = 1;
  bool dedupe = true;

  // Throws InvalidArgument naming the offending field.
  void validate() const;
};

struct SearchCounts {
  Int enumerated = 0;
  // Survivors of the injectivity and covering tests. When t_max >= 2 every
  // lattice is analyzed in full and both equal the hit count before dedupe.
  Int injective = 0;
  Int covering = 0;

  friend bool operator==(const SearchCounts&, const SearchCounts&) = default;
};

struct SearchHit {
  HnfBasis basis;
  CodeAnalysis analysis;
};

struct SearchReport {
  SearchQuery query;
  std::vector<SearchHit> hits;  // sorted by (det, basis)
  SearchCounts counts;
  std::string bound_provenance;
};

struct SearchOptions {
  // <= 0 picks QP_JOBS, then the hardware concurrency.
  int jobs = 0;
  // Per-volume progress file "M<TAB>hits<TAB>millis". Hits of completed
  // volumes go to "<checkpoint>.hits" so an interrupted run can resume.
  std::optional<std::string> checkpoint;
  std::string bound_provenance = "volume range supplied by caller";
  std::function<void(Int volume, Int hits, Int millis)> on_volume_done;
};

// Residues of a point under the quotient map Z^n -> Z^n / Lambda.
struct HomomorphismLabel {
  std::vector<Int> residues;

  friend bool operator==(const HomomorphismLabel&, const HomomorphismLabel&) = default;
  friend auto operator<=>(const HomomorphismLabel&, const HomomorphismLabel&) = default;
};

HomomorphismLabel homomorphism_label(const HnfBasis& b, std::span<const Int> x);

// Distinct labels on every point of B_p^n(s). False without enumerating
// when mu(s) > det.
bool injectivity_test(const HnfBasis& b, int p, PowRadius s);

// Every coset of the lattice meets B_p^n(s).
bool covering_test(const HnfBasis& b, int p, PowRadius s);

// One canonical representative per congruence class, sorted.
std::vector<HnfBasis> dedupe_congruence(const std::vector<HnfBasis>& hits);

// Packing radius the t <= 1 fast path assumes at volume m:
// the largest attainable s with mu(s) <= m.
PowRadius fast_path_radius(int n, int p, Int m);

int default_jobs();

SearchReport run_search(const SearchQuery& q, const SearchOptions& options = {});

}  // namespace qpcodes

#endif  // QPCODES_SEARCH_HPP_
