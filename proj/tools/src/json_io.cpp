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

#include <cmath>
#include <locale>
#include <sstream>

#include "qpcodes/cli/cli.hpp"

namespace qpcodes::cli {
namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

Json matrix_json(const IntMatrix& m) { return Json(m.to_rows()); }

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (!v.empty() && v.front().is_array()) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < v[i].size(); ++j) {
          if (j) out += ',';
          out += v[i][j].dump();
        }
      }
      return out;
    }
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += cell_text(v[i]);
    }
    return out;
  }
  return v.dump();
}

Json cell_json(const std::string& s) {
  if (s.empty()) return nullptr;
  const Json parsed = Json::parse(s, nullptr, false);
  if (!parsed.is_discarded() && parsed.is_number()) return parsed;
  return s;
}

}  // namespace

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << v;
  return os.str();
}

std::string Table::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_cell(header[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

Json Table::to_json() const {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) obj[header[i]] = cell_json(row[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& v : j) {
    if (v.is_structured()) return false;
  }
  return true;
}

bool matrix_like(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& v : j) {
    if (!scalar_array(v)) return false;
  }
  return true;
}

void write_pretty(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (scalar_array(j) || (matrix_like(j) && j.size() <= 4)) {
    out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
    return;
  }
  if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_pretty(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write_pretty(it.value(), depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string pretty_json(const Json& j) {
  std::string out;
  write_pretty(j, 0, out);
  return out + "\n";
}

Json analysis_to_json(const CodeAnalysis& a) {
  Json j = Json::object();
  j["basis"] = matrix_json(a.basis.rows());
  j["dim"] = a.dim();
  j["det"] = a.det();
  j["p"] = a.p;
  j["t"] = a.t;
  j["r_pow"] = a.r_pow.s;
  j["r"] = radius_value(a.p, a.r_pow);
  j["R_pow"] = a.R_pow.s;
  j["R"] = radius_value(a.p, a.R_pow);
  j["mu_r"] = a.mu_r;
  j["mu_R"] = a.mu_R;
  j["disc_pack_density"] = to_string(a.disc_pack_density_exact);
  j["disc_pack_density_value"] = a.disc_pack_density;
  j["disc_cover_density"] = to_string(a.disc_cover_density_exact);
  j["disc_cover_density_value"] = a.disc_cover_density;
  j["shortest_pow"] = a.shortest_pow.s;
  j["real_pack_radius"] = a.real_pack_radius;
  j["real_pack_density"] = a.real_pack_density;
  j["real_cover_radius"] = optional_number(a.real_cover_radius);
  j["real_cover_density"] = optional_number(a.real_cover_density);
  return j;
}

Json search_report_to_json(const SearchReport& r) {
  Json q = Json::object();
  q["n"] = r.query.n;
  q["p"] = r.query.p;
  q["volume_min"] = r.query.volume_min;
  q["volume_max"] = r.query.volume_max;
  q["t_max"] = r.query.t_max == kUnboundedT ? Json(nullptr) : Json(r.query.t_max);
  q["dedupe"] = r.query.dedupe;
  Json counts = Json::object();
  counts["enumerated"] = r.counts.enumerated;
  counts["injective"] = r.counts.injective;
  counts["covering"] = r.counts.covering;
  counts["hits"] = r.hits.size();
  Json hits = Json::array();
  for (const SearchHit& h : r.hits) {
    Json hit = Json::object();
    hit["basis"] = matrix_json(h.basis.rows());
    hit["analysis"] = analysis_to_json(h.analysis);
    hits.push_back(std::move(hit));
  }
  Json j = Json::object();
  j["query"] = std::move(q);
  j["counts"] = std::move(counts);
  j["bound_provenance"] = r.bound_provenance;
  j["hits"] = std::move(hits);
  return j;
}

Json family_to_json(const FamilySpec& f, const std::optional<CodeAnalysis>& verified) {
  Json j = Json::object();
  j["family"] = to_string(f.family);
  j["r"] = to_string(f.r);
  j["p"] = f.p;
  j["basis"] = matrix_json(f.basis.rows());
  j["det"] = f.basis.det();
  j["predicted_t"] = f.predicted_t;
  j["predicted_disc_density"] = to_string(f.predicted_disc_density);
  if (verified) {
    Json v = Json::object();
    v["t"] = verified->t;
    v["disc_pack_density"] = to_string(verified->disc_pack_density_exact);
    v["t_matches"] = verified->t == f.predicted_t;
    v["density_matches"] = verified->disc_pack_density_exact == f.predicted_disc_density;
    v["analysis"] = analysis_to_json(*verified);
    j["verification"] = std::move(v);
  }
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const BoundRow& row : r.rows) {
    Json o = Json::object();
    o["r_pow"] = row.r_pow.s;
    o["mu"] = row.mu;
    o["delta_lower"] = row.delta_lower;
    o["theta_upper_R"] = row.theta_upper_R;
    o["theta_upper_r"] = row.theta_upper_r;
    rows.push_back(std::move(o));
  }
  Json j = Json::object();
  j["n"] = r.n;
  j["p"] = r.p;
  j["theta_min"] = r.theta_min;
  j["mode"] = to_string(r.mode);
  j["r_pow_max"] = r.r_pow_max.s;
  j["volume_max"] = r.volume_max;
  j["mu_at_r_max"] = r.mu_at_r_max;
  j["rows"] = std::move(rows);
  return j;
}

Table json_rows_to_table(const std::vector<Json>& objects) {
  Table t;
  if (objects.empty()) return t;
  for (const auto& [key, _] : objects.front().items()) t.header.push_back(key);
  for (const Json& o : objects) {
    std::vector<std::string> row;
    row.reserve(t.header.size());
    for (const std::string& key : t.header) row.push_back(o.contains(key) ? cell_text(o.at(key)) : "");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace qpcodes::cli
