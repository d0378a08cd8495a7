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

#ifndef QPCODES_CLI_CLI_HPP_
#define QPCODES_CLI_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpcodes/bounds.hpp"
#include "qpcodes/code_analysis.hpp"
#include "qpcodes/families.hpp"
#include "qpcodes/lattice.hpp"
#include "qpcodes/search.hpp"

#include "json.hpp"

namespace qpcodes::cli {

using Json = nlohmann::ordered_json;

// Exit codes of cmd_dispatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

// Rectangular text table; serializes to CSV or to a JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  Json to_json() const;
};

// Locale-independent fixed-point rendering.
std::string fixed(double v, int decimals);

// Indented JSON with arrays of scalars kept on one line.
std::string pretty_json(const Json& j);

Json analysis_to_json(const CodeAnalysis& a);
Json search_report_to_json(const SearchReport& r);
Json family_to_json(const FamilySpec& f, const std::optional<CodeAnalysis>& verified);
Json bound_report_to_json(const BoundReport& r);

// One row per object; nested arrays become compact matrix/list strings.
Table json_rows_to_table(const std::vector<Json>& objects);

// table1 | table2 | table3 | table4, regenerated from the library.
Table cmd_tables(const std::string& which);

// Squares centred on the points of B_p^2(r); with a basis, translates of the
// polyomino by lattice vectors in a window around the origin.
std::string cmd_polyomino(int p, const Rational& r, const std::optional<LatticeBasis>& basis);

int cmd_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpcodes::cli

#endif  // QPCODES_CLI_CLI_HPP_
