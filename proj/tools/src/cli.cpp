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

#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qpcodes/cli/cli.hpp"
#include "qpcodes/errors.hpp"

namespace qpcodes::cli {
namespace {

struct Common {
  int dim = 2;
  int p = 2;
  std::string format;
  std::string out_path;
};

// Re-throws library validation errors with the offending flag in front.
template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(flag + ": " + e.what());
  } catch (const SingularMatrix& e) {
    throw InvalidArgument(flag + ": " + e.what());
  } catch (const DimensionUnsupported& e) {
    throw InvalidArgument(flag + ": " + e.what());
  } catch (const HypothesisViolated& e) {
    throw InvalidArgument(flag + ": " + e.what());
  }
}

LatticeBasis parse_basis(const std::string& text, int dim) {
  LatticeBasis b = with_flag("--basis", [&] { return LatticeBasis(parse_matrix(text)); });
  if (b.dim() != dim) {
    throw InvalidArgument("--dim is " + std::to_string(dim) + " but --basis has " + std::to_string(b.dim()) + " rows");
  }
  return b;
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  return with_flag(flag, [&] { return parse_rational(text); });
}

std::string render(const Common& c, const Json& json, const std::function<Table()>& table) {
  if (c.format == "csv") return table().to_csv();
  return pretty_json(json);
}

// Each subcommand owns its --format slot so defaults do not collide.
void add_format(CLI::App* sub, Common& c, std::map<const CLI::App*, std::string>& formats,
                const std::string& default_format) {
  std::string& slot = formats[sub] = default_format;
  sub->add_option("--format", slot, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
}

void add_dim(CLI::App* sub, Common& c) {
  sub->add_option("--dim", c.dim, "Dimension n")->check(CLI::Range(1, kMaxDim))->capture_default_str();
}

void add_p(CLI::App* sub, Common& c) {
  sub->add_option("--p", c.p, "Exponent p of the l_p metric")->required()->check(CLI::PositiveNumber);
}

Int parse_t_max(const std::string& text) {
  if (text == "inf" || text == "infinity") return kUnboundedT;
  Int v = 0;
  std::istringstream is(text);
  if (!(is >> v) || !is.eof() || v < 0) throw InvalidArgument("--t-max must be a nonnegative integer or 'inf'");
  return v;
}

}  // namespace

int cmd_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect and quasi-perfect lattice codes in Z^n under l_p metrics", "qpcodes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common c;
  std::map<const CLI::App*, std::string> formats;
  std::function<std::string()> run;

  // analyze
  std::string basis_text;
  auto* analyze_cmd = app.add_subcommand("analyze", "Packing/covering figures of one lattice code");
  add_dim(analyze_cmd, c);
  add_p(analyze_cmd, c);
  analyze_cmd->add_option("--basis", basis_text, "Generator rows: JSON [[a,b],[c,d]] or compact a,b;c,d")->required();
  add_format(analyze_cmd, c, formats, "json");
  analyze_cmd->callback([&] {
    run = [&] {
      const LatticeBasis b = parse_basis(basis_text, c.dim);
      const Json j = analysis_to_json(analyze(b, c.p));
      return render(c, j, [&] { return json_rows_to_table({j}); });
    };
  });

  // search
  SearchQuery query;
  std::optional<Int> max_volume;
  std::string t_max_text = "1";
  bool no_dedupe = false;
  int jobs = 0;
  std::string checkpoint;
  auto* search = app.add_subcommand("search", "Exhaustive search over sublattices by volume");
  add_dim(search, c);
  add_p(search, c);
  search->add_option("--min-volume", query.volume_min, "Smallest volume searched")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search->add_option("--max-volume", max_volume,
                     "Largest volume searched (default: density bound when known for (n, p))")
      ->check(CLI::PositiveNumber);
  search->add_option("--t-max", t_max_text, "Largest degree of imperfection kept, or 'inf'")->capture_default_str();
  search->add_flag("--no-dedupe", no_dedupe, "Keep every HNF basis instead of one per congruence class");
  search->add_option("--jobs", jobs, "Worker threads (default: QP_JOBS, then hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--checkpoint", checkpoint, "Per-volume progress file; resumes a previous run");
  add_format(search, c, formats, "json");
  search->callback([&] {
    run = [&] {
      query.n = c.dim;
      query.p = c.p;
      query.t_max = parse_t_max(t_max_text);
      query.dedupe = !no_dedupe;
      SearchOptions options;
      options.jobs = jobs;
      if (!checkpoint.empty()) options.checkpoint = checkpoint;
      if (max_volume) {
        query.volume_max = *max_volume;
        options.bound_provenance = "--max-volume " + std::to_string(*max_volume);
      } else {
        const auto k = known_density_constants(c.dim, c.p);
        if (!k) {
          throw InvalidArgument("--max-volume is required: no covering density constant is known for n=" +
                                std::to_string(c.dim) + ", p=" + std::to_string(c.p));
        }
        const BoundReport bound = bound_report(c.dim, c.p, k->theta_min, BoundMode::kQuasiPerfect);
        query.volume_max = bound.volume_max;
        options.bound_provenance = "density bound theta_min=" + fixed(k->theta_min, 4) +
                                   ": r_pow_max=" + std::to_string(bound.r_pow_max.s) +
                                   ", volume_max=" + std::to_string(bound.volume_max) +
                                   ", mu(r_pow_max)=" + std::to_string(bound.mu_at_r_max);
      }
      if (query.volume_max < query.volume_min) throw InvalidArgument("--max-volume must be at least --min-volume");
      const SearchReport report = run_search(query, options);
      const Json j = search_report_to_json(report);
      return render(c, j, [&] {
        std::vector<Json> rows;
        for (const Json& hit : j["hits"]) rows.push_back(hit["analysis"]);
        return json_rows_to_table(rows);
      });
    };
  });

  // ball
  Int rpow = 0;
  bool list = false;
  auto* ball = app.add_subcommand("ball", "Integer points of B_p^n(r) with r^p = S");
  add_dim(ball, c);
  add_p(ball, c);
  ball->add_option("--rpow", rpow, "S = r^p")->required()->check(CLI::NonNegativeNumber);
  ball->add_flag("--list", list, "Include the points");
  add_format(ball, c, formats, "json");
  ball->callback([&] {
    run = [&] {
      const PowRadius s(rpow);
      Json j = Json::object();
      j["n"] = c.dim;
      j["p"] = c.p;
      j["r_pow"] = s.s;
      j["r"] = radius_value(c.p, s);
      j["mu"] = mu(c.dim, c.p, s);
      j["representable"] = is_representable(c.dim, c.p, s);
      if (s.s > 0) {
        const BallShape shape = classify_ball_pow(c.dim, c.p, s);
        j["case"] = to_string(shape.kind);
        j["predicted_mu"] = shape.predicted_mu ? Json(*shape.predicted_mu) : Json(nullptr);
        j["literal_case_ii_disagrees"] = shape.literal_case_ii_disagrees;
      }
      PointList points;
      if (list) {
        points = ball_points(c.dim, c.p, s);
        Json arr = Json::array();
        for (std::size_t i = 0; i < points.size(); ++i) arr.push_back(std::vector<Int>(points[i].begin(), points[i].end()));
        j["points"] = std::move(arr);
      }
      return render(c, j, [&] {
        if (!list) return json_rows_to_table({j});
        Table t;
        for (int k = 0; k < c.dim; ++k) t.header.push_back("x" + std::to_string(k + 1));
        for (std::size_t i = 0; i < points.size(); ++i) {
          std::vector<std::string> row;
          for (Int v : points[i]) row.push_back(std::to_string(v));
          t.rows.push_back(std::move(row));
        }
        return t;
      });
    };
  });

  // distset
  Int limit = 0;
  auto* distset = app.add_subcommand("distset", "Attainable l_p distances s = r^p up to a limit");
  add_dim(distset, c);
  add_p(distset, c);
  distset->add_option("--limit", limit, "Largest s")->required()->check(CLI::NonNegativeNumber);
  add_format(distset, c, formats, "json");
  distset->callback([&] {
    run = [&] {
      const DistanceSet d = distance_set(c.dim, c.p, PowRadius(limit));
      Json j = Json::object();
      j["n"] = c.dim;
      j["p"] = c.p;
      j["limit"] = limit;
      j["size"] = d.elements().size();
      Json elems = Json::array();
      for (PowRadius s : d.elements()) elems.push_back(s.s);
      j["elements"] = std::move(elems);
      return render(c, j, [&] {
        Table t;
        t.header = {"s", "r"};
        for (PowRadius s : d.elements()) t.rows.push_back({std::to_string(s.s), Json(radius_value(c.p, s)).dump()});
        return t;
      });
    };
  });

  // family
  std::string kind_text;
  std::string r_text;
  bool verify = false;
  auto* family_cmd = app.add_subcommand("family", "Explicit planar family at (r, p)");
  family_cmd->add_option("--kind", kind_text, "Family A, B, C or D")->required();
  family_cmd->add_option("--r", r_text, "Radius parameter: integer, a/b or decimal")->required();
  add_p(family_cmd, c);
  family_cmd->add_flag("--verify", verify, "Analyze the basis and compare with the prediction");
  add_format(family_cmd, c, formats, "json");
  family_cmd->callback([&] {
    run = [&] {
      const FamilyKind kind = with_flag("--kind", [&] { return parse_family_kind(kind_text); });
      const Rational r = parse_rational_flag("--r", r_text);
      const FamilySpec spec = with_flag("--r/--p", [&] { return family(kind, r, c.p); });
      std::optional<CodeAnalysis> verified;
      if (verify) verified = analyze(spec.basis, c.p);
      const Json j = family_to_json(spec, verified);
      return render(c, j, [&] {
        Json flat = j;
        if (flat.contains("verification")) {
          const Json v = flat["verification"];
          flat.erase("verification");
          flat["verified_t"] = v["t"];
          flat["verified_disc_pack_density"] = v["disc_pack_density"];
          flat["t_matches"] = v["t_matches"];
          flat["density_matches"] = v["density_matches"];
        }
        return json_rows_to_table({flat});
      });
    };
  });

  // bounds
  std::optional<double> theta_min;
  std::string mode_text = "quasiperfect";
  auto* bounds = app.add_subcommand("bounds", "Density bounds on the packing radius and volume");
  add_dim(bounds, c);
  add_p(bounds, c);
  bounds->add_option("--theta-min", theta_min, "Best known lattice covering density (default: known constant)")
      ->check(CLI::PositiveNumber);
  bounds->add_option("--mode", mode_text, "perfect or quasiperfect")
      ->check(CLI::IsMember({"perfect", "quasiperfect"}))
      ->capture_default_str();
  add_format(bounds, c, formats, "csv");
  bounds->callback([&] {
    run = [&] {
      if (!theta_min) {
        const auto k = known_density_constants(c.dim, c.p);
        if (!k) throw InvalidArgument("--theta-min is required for n=" + std::to_string(c.dim) + ", p=" + std::to_string(c.p));
        theta_min = k->theta_min;
      }
      const BoundMode mode = mode_text == "perfect" ? BoundMode::kPerfect : BoundMode::kQuasiPerfect;
      const BoundReport report = bound_report(c.dim, c.p, *theta_min, mode);
      const Json j = bound_report_to_json(report);
      return render(c, j, [&] {
        std::vector<Json> rows(j["rows"].begin(), j["rows"].end());
        return json_rows_to_table(rows);
      });
    };
  });

  // tables
  std::string which;
  auto* tables = app.add_subcommand("tables", "Regenerate a reference table");
  tables->add_option("--which", which, "table1, table2, table3 or table4")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3", "table4"}));
  add_format(tables, c, formats, "csv");
  tables->callback([&] {
    run = [&] {
      const Table t = cmd_tables(which);
      return c.format == "csv" ? t.to_csv() : pretty_json(t.to_json());
    };
  });

  // polyomino
  std::string poly_basis;
  std::string poly_r;
  auto* poly = app.add_subcommand("polyomino", "SVG of the planar polyomino of B_p^2(r)");
  add_p(poly, c);
  poly->add_option("--r", poly_r, "Radius: integer, a/b or decimal")->required();
  poly->add_option("--basis", poly_basis, "Optional lattice whose translates are drawn");
  poly->add_option("--out", c.out_path, "SVG output file (default stdout)");
  poly->callback([&] {
    run = [&] {
      const Rational r = parse_rational_flag("--r", poly_r);
      std::optional<LatticeBasis> b;
      if (!poly_basis.empty()) b = parse_basis(poly_basis, 2);
      return cmd_polyomino(c.p, r, b);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const CLI::App* sub : app.get_subcommands()) {
    if (auto it = formats.find(sub); it != formats.end()) c.format = it->second;
  }

  try {
    const std::string text = run();
    if (c.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out_path);
      if (!f) throw InvalidArgument("--out: cannot write '" + c.out_path + "'");
      f << text;
    }
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionUnsupported& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisViolated& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Overflow& e) {
    err << "error: " << e.what() << " (r^p or a volume exceeds the 64-bit range)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace qpcodes::cli
