#pragma once

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bvmirror/borcea_voisin.hpp"
#include "bvmirror/branch_config.hpp"
#include "bvmirror/error.hpp"
#include "bvmirror/fixed_locus.hpp"

namespace bvmirror::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInternalError = 3, kFalsified = 4 };

enum class Format { Text, Json };

namespace detail {

inline void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BranchConfiguration load_configuration(const std::string& inline_config, const std::string& path) {
  if (!inline_config.empty() && !path.empty()) throw InputError("give either an inline configuration or --input, not both");
  if (!path.empty()) return parse_configuration(read_file(path));
  if (inline_config.empty()) throw InputError("no configuration given (inline or --input)");
  return parse_configuration(inline_config);
}

inline std::string hodge_text(const HodgeNumbers& h) {
  return "(" + std::to_string(h.h11) + ", " + std::to_string(h.h21) + ")";
}

inline void print_report(std::ostream& out, const PipelineReport& r) {
  out << "configuration: " << to_inline(r.configuration) << '\n';
  out << "stratum: j=" << r.stratum.j << " (double points: " << r.stratum.doubles << ")\n";
  out << "curve genus: " << r.genus << '\n';
  out << "singular fibers:\n";
  for (const auto& row : r.fibers.rows) {
    out << "  t=" << std::left << std::setw(6) << to_string(row.point) << " v(g)=" << row.v_g << "  "
        << std::setw(4) << to_string(row.type) << " euler " << euler_number(row.type) << "  components "
        << component_count(row.type) << '\n';
  }
  out << "total euler number: " << r.fibers.total_euler << " (K3: " << (r.k3 ? "yes" : "no") << ")\n";
  out << "fixed locus of iota: N=" << r.fixed_locus.N << ", N'=" << r.fixed_locus.Nprime << '\n';
  for (const auto& c : r.fixed_locus.curves) {
    out << "  " << to_string(c.kind);
    if (c.at) out << " at t=" << to_string(*c.at);
    out << ", genus " << c.genus << '\n';
  }
  out << "Hodge numbers: h11=" << r.hodge.h11 << ", h21=" << r.hodge.h21 << '\n';
  out << "euler characteristic: " << r.euler << '\n';
  if (r.lambda) out << "elliptic factor lambda: " << to_string(*r.lambda) << " (does not affect the invariants)\n";
  if (r.stratum.extrapolated) {
    out << "note: extrapolated beyond the j=1..3 strata (three double points)\n";
    out << "mirror partner stratum: none\n";
    return;
  }
  out << "mirror check against the j=" << *r.mirror.partner_j << " representative "
      << hodge_text(*r.mirror.partner_hodge) << ": " << (r.mirror.holds ? "holds" : "FAILS") << '\n';
  out << "mirror partner stratum: j=" << *r.mirror.partner_j << '\n';
}

inline std::vector<ProjectivePoint> parse_axis(const std::string& text) {
  std::vector<ProjectivePoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_point(item));
  if (out.empty()) throw InputError("empty grid axis '" + text + "'");
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands. Each returns an exit code and writes results to `out`.

inline int cmd_analyze(const BranchConfiguration& c, const AnalyzeOptions& options, Format format,
                       std::ostream& out) {
  const auto report = analyze(c, options);
  if (format == Format::Json) {
    detail::emit(out, to_json(report));
  } else {
    detail::print_report(out, report);
  }
  if (report.mirror.partner_j && !report.mirror.holds) return kFalsified;
  return kOk;
}

inline int cmd_table(bool extrapolate, Format format, std::ostream& out) {
  const auto rows = hodge_table(extrapolate);
  if (format == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back({{"j", r.j}, {"h11", r.hodge.h11}, {"h21", r.hodge.h21}});
    detail::emit(out, {{"schema_version", kReportSchemaVersion}, {"rows", arr}});
    return kOk;
  }
  out << " j | h11 | h21\n---+-----+-----\n";
  for (const auto& r : rows) {
    out << ' ' << r.j << " | " << std::setw(3) << r.hodge.h11 << " | " << std::setw(3) << r.hodge.h21
        << (r.j == 0 ? "   (extrapolated)" : "") << '\n';
  }
  return kOk;
}

inline int cmd_collide(const BranchConfiguration& c, const ProjectivePoint& a, const ProjectivePoint& b,
                       Format format, std::ostream& out) {
  const auto collided = collide(c, a, b);
  const auto report = analyze(collided);
  if (format == Format::Json) {
    detail::emit(out, {{"schema_version", kReportSchemaVersion},
                       {"input", to_json(c)},
                       {"collided", to_json(collided)},
                       {"from_j", stratum(c).j},
                       {"to_j", report.stratum.j},
                       {"report", to_json(report)}});
  } else {
    out << "collided " << to_string(b) << " into " << to_string(a) << ": j=" << stratum(c).j << " -> j="
        << report.stratum.j << '\n';
    detail::print_report(out, report);
  }
  return kOk;
}

inline int cmd_csp(bool dump_solutions, bool weaken_alpha_on_d3, Format format, std::ostream& out) {
  const auto solutions = solve_fiber_csp({weaken_alpha_on_d3});
  const auto verdict = lemma_and_corollary_report(solutions);
  if (format == Format::Json || dump_solutions) {
    auto j = nlohmann::ordered_json{{"schema_version", kReportSchemaVersion},
                                    {"weaken_alpha_on_D3", weaken_alpha_on_d3},
                                    {"verdict", to_json(verdict)}};
    if (dump_solutions) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& s : solutions) arr.push_back(to_json(s));
      j["solutions"] = arr;
    }
    detail::emit(out, j);
  } else {
    out << "IV* fiber search" << (weaken_alpha_on_d3 ? " (alpha allowed trivial on D3)" : "") << '\n';
    out << "solutions: " << verdict.solution_count << '\n';
    out << "lemma_holds (D0 never fixed pointwise): " << (verdict.lemma_holds ? "true" : "false") << '\n';
    out << "corollary_holds (D6 fixed, handles (D1,D4)<->(D2,D5) swapped): "
        << (verdict.corollary_holds ? "true" : "false") << '\n';
    out << "C meets the fiber on (derived):";
    for (int k : verdict.curve_landings) out << ' ' << node_name(k);
    out << '\n';
    for (const auto& n : verdict.notes) out << "note: " << n << '\n';
  }
  return verdict.lemma_holds && verdict.corollary_holds ? kOk : kFalsified;
}

struct SweepRow {
  std::size_t index = 0;
  std::array<ProjectivePoint, 3> params;
  std::optional<PipelineReport> report;
  std::string error;
};

/// Configurations {0, 1, inf, alpha, beta, gamma}, with coinciding parameters
/// merged into higher multiplicity. Rows come back in grid order.
inline std::vector<SweepRow> sweep(const std::vector<ProjectivePoint>& alphas,
                                   const std::vector<ProjectivePoint>& betas,
                                   const std::vector<ProjectivePoint>& gammas) {
  std::vector<SweepRow> rows;
  for (const auto& a : alphas) {
    for (const auto& b : betas) {
      for (const auto& g : gammas) {
        SweepRow row{rows.size(), {a, b, g}, std::nullopt, {}};
        std::vector<BranchPoint> raw;
        for (const auto& p : {ProjectivePoint(0), ProjectivePoint(1), ProjectivePoint::infinity(), a, b, g}) {
          auto it = std::find_if(raw.begin(), raw.end(), [&](const BranchPoint& bp) { return bp.point == p; });
          if (it == raw.end()) {
            raw.push_back({p, 1});
          } else {
            ++it->multiplicity;
          }
        }
        try {
          row.report = analyze(validate(std::move(raw)));
        } catch (const InputError& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

/// Collision edges j -> j-1 realized by grid neighbours differing in one parameter.
inline std::set<std::pair<int, int>> collision_edges(const std::vector<SweepRow>& rows) {
  std::set<std::pair<int, int>> edges;
  for (const auto& x : rows) {
    for (const auto& y : rows) {
      if (!x.report || !y.report) continue;
      int differing = 0;
      for (std::size_t i = 0; i < 3; ++i) differing += x.params[i] == y.params[i] ? 0 : 1;
      if (differing == 1 && y.report->stratum.j == x.report->stratum.j - 1) {
        edges.insert({x.report->stratum.j, y.report->stratum.j});
      }
    }
  }
  return edges;
}

inline int cmd_sweep(const std::vector<ProjectivePoint>& alphas, const std::vector<ProjectivePoint>& betas,
                     const std::vector<ProjectivePoint>& gammas, Format format, std::ostream& out) {
  const auto rows = sweep(alphas, betas, gammas);
  const auto edges = collision_edges(rows);
  if (format == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j{{"index", r.index},
                               {"params", {to_string(r.params[0]), to_string(r.params[1]), to_string(r.params[2])}}};
      if (r.report) {
        j["configuration"] = to_inline(r.report->configuration);
        j["j"] = r.report->stratum.j;
        j["genus"] = r.report->genus;
        j["N"] = r.report->fixed_locus.N;
        j["Nprime"] = r.report->fixed_locus.Nprime;
        j["h11"] = r.report->hodge.h11;
        j["h21"] = r.report->hodge.h21;
      } else {
        j["error"] = r.error;
      }
      arr.push_back(std::move(j));
    }
    auto edge_arr = nlohmann::ordered_json::array();
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      edge_arr.push_back(std::to_string(it->first) + " -> " + std::to_string(it->second));
    }
    detail::emit(out, {{"schema_version", kReportSchemaVersion}, {"rows", arr}, {"collision_edges", edge_arr}});
    return kOk;
  }
  for (const auto& r : rows) {
    out << '#' << r.index << " (" << to_string(r.params[0]) << ", " << to_string(r.params[1]) << ", "
        << to_string(r.params[2]) << "): ";
    if (r.report) {
      out << "j=" << r.report->stratum.j << " genus=" << r.report->genus << " N=" << r.report->fixed_locus.N
          << " N'=" << r.report->fixed_locus.Nprime << " h11=" << r.report->hodge.h11
          << " h21=" << r.report->hodge.h21 << "  [" << to_inline(r.report->configuration) << "]\n";
    } else {
      out << "skipped: " << r.error << '\n';
    }
  }
  out << "collision edges:";
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) out << "  " << it->first << " -> " << it->second;
  out << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of K3 surfaces y^2 = x^3 + f(t)^2 and their Borcea-Voisin threefolds"};
  app.require_subcommand(1);

  std::string format_name = "text";
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string config_text, input_path, lambda_text, point_a, point_b;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline on one configuration");
  analyze_cmd->add_option("config", config_text, "Inline configuration, e.g. 0:1,1:2,7:2,inf:1");
  analyze_cmd->add_option("-i,--input", input_path, "JSON or inline configuration file");
  analyze_cmd->add_option("--lambda", lambda_text, "Modulus of the elliptic factor (recorded only)");
  add_format(analyze_cmd);

  bool extrapolate = false;
  auto* table_cmd = app.add_subcommand("table", "Hodge numbers per stratum, computed live");
  table_cmd->add_flag("--extrapolate", extrapolate, "Include the j=0 stratum");
  add_format(table_cmd);

  auto* collide_cmd = app.add_subcommand("collide", "Collide two simple branch points and analyze the result");
  collide_cmd->add_option("config", config_text, "Inline configuration");
  collide_cmd->add_option("-i,--input", input_path, "JSON or inline configuration file");
  collide_cmd->add_option("--a", point_a, "Surviving point")->required();
  collide_cmd->add_option("--b", point_b, "Point merged into --a")->required();
  add_format(collide_cmd);

  bool dump_solutions = false, weaken = false;
  auto* csp_cmd = app.add_subcommand("csp", "Search the iota actions on an IV* fiber");
  csp_cmd->add_flag("--dump-solutions", dump_solutions, "Print every solution as JSON");
  csp_cmd->add_flag("--weaken-alpha-on-D3", weaken, "Allow alpha to act trivially on D3");
  add_format(csp_cmd);

  std::string grid, alpha_axis, beta_axis, gamma_axis;
  auto* sweep_cmd = app.add_subcommand("sweep", "Analyze {0,1,inf,alpha,beta,gamma} over a parameter grid");
  sweep_cmd->add_option("--grid", grid, "Comma-separated values used on all three axes");
  sweep_cmd->add_option("--alpha", alpha_axis, "Values for alpha");
  sweep_cmd->add_option("--beta", beta_axis, "Values for beta");
  sweep_cmd->add_option("--gamma", gamma_axis, "Values for gamma");
  add_format(sweep_cmd);

  std::vector<std::string> argv_storage{"bvmirror"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    return kInputError;
  }

  const Format format = formats.at(format_name);
  try {
    if (*analyze_cmd) {
      AnalyzeOptions options;
      if (!lambda_text.empty()) {
        const auto lambda = parse_point(lambda_text);
        validate_lambda(lambda);
        options.lambda = lambda.value();
      }
      return cmd_analyze(detail::load_configuration(config_text, input_path), options, format, out);
    }
    if (*table_cmd) return cmd_table(extrapolate, format, out);
    if (*collide_cmd) {
      return cmd_collide(detail::load_configuration(config_text, input_path), parse_point(point_a),
                         parse_point(point_b), format, out);
    }
    if (*csp_cmd) return cmd_csp(dump_solutions, weaken, format, out);
    if (*sweep_cmd) {
      const auto axis = [&](const std::string& specific) {
        if (!specific.empty()) return detail::parse_axis(specific);
        if (!grid.empty()) return detail::parse_axis(grid);
        throw InputError("sweep needs --grid or all of --alpha/--beta/--gamma");
      };
      return cmd_sweep(axis(alpha_axis), axis(beta_axis), axis(gamma_axis), format, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace bvmirror::cli
