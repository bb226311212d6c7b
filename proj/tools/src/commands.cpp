// Copyright 2026 The subplanck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <fmt/format.h>

#include "output.hpp"
#include "subplanck/closedform.hpp"
#include "subplanck/error.hpp"
#include "subplanck/fock.hpp"
#include "subplanck/metrics.hpp"
#include "subplanck/oracle_state.hpp"
#include "subplanck_cli/cli.hpp"

namespace subplanck::cli {
namespace {

using phasespace::Backend;
using phasespace::Quantity;

std::vector<Backend> backends_of(BackendChoice c) {
  switch (c) {
    case BackendChoice::closedform: return {Backend::closedform};
    case BackendChoice::oracle: return {Backend::oracle};
    case BackendChoice::both: return {Backend::closedform, Backend::oracle};
  }
  return {};
}

// Collects everything that goes into the sidecar.
struct Run {
  const RunConfig& cfg;
  std::ostream& out;
  std::string data_path;
  Json results = Json::object();
  Json cutoffs = Json::object();
  std::vector<std::string> outputs;

  std::string ext() const { return cfg.format == Format::csv ? ".csv" : ".json"; }

  // Data file for one backend when several are written.
  std::string path_for(const std::string& tag, bool several) const {
    return several ? with_suffix(data_path, tag) : data_path;
  }
};

void field_outputs(Run& run, Quantity quantity) {
  const auto list = backends_of(run.cfg.backend);
  const bool several = list.size() > 1;
  std::vector<phasespace::ScalarField> fields;
  Json radii = Json::object();
  for (Backend b : list) {
    const std::string name(phasespace::to_string(b));
    phasespace::ScalarField field;
    if (quantity == Quantity::overlap) {
      metrics::OverlapMap map = metrics::sensitivity_map(run.cfg.spec, *run.cfg.grid, b, run.cfg.threads);
      Json dirs = Json::array();
      for (const auto& d : map.radii) {
        Json j{{"direction", d.direction}, {"ux", d.ux}, {"up", d.up}};
        j["radius"] = d.radius ? Json(*d.radius) : Json(nullptr);
        if (!d.note.empty()) j["note"] = d.note;
        dirs.push_back(j);
        run.out << fmt::format("{:<11} first-zero radius along {:<12} {}\n", name, d.direction,
                               d.radius ? number(*d.radius) : "none (" + d.note + ")");
      }
      radii[name] = dirs;
      field = std::move(map.field);
    } else {
      field = phasespace::evaluate_field(run.cfg.spec, *run.cfg.grid, b, quantity, run.cfg.threads);
    }
    const std::string path = run.path_for(name, several);
    write_field(path, field, run.cfg.format);
    run.outputs.push_back(path);
    run.cutoffs[name] = field.cutoff;
    run.results["origin_value"][name] = field.origin_value;
    run.out << fmt::format("{:<11} {} field written to {} (peak |value| {})\n", name,
                           phasespace::to_string(quantity), path, number(field.peak_abs()));
    fields.push_back(std::move(field));
  }
  if (quantity == Quantity::overlap) run.results["first_zero_radii"] = radii;
  if (fields.size() == 2) {
    const auto s = phasespace::residual_stats(fields[0], fields[1]);
    run.results["residual"] = {{"max_abs", s.max_abs}, {"max_rel_to_peak", s.max_rel_to_peak}, {"rms", s.rms}};
    run.out << fmt::format("residual closedform-oracle: max_abs {} max_rel_to_peak {} rms {}\n", number(s.max_abs),
                           number(s.max_rel_to_peak), number(s.rms));
  }
}

void state_command(Run& run) {
  const StateSpec& spec = run.cfg.spec;
  Json info;
  info["spec"] = spec_json(spec);
  info["description"] = spec.describe();
  const fock::OracleState oracle = fock::oracle_state(spec);
  info["oracle_cutoff"] = oracle.cutoff;
  info["mean_photon"] = oracle.mean_photon();
  info["purity"] = oracle.ensemble.density().purity();
  for (Backend b : backends_of(run.cfg.backend)) {
    const phasespace::PointEvaluator w(spec, b, Quantity::wigner);
    info["wigner_origin"][std::string(phasespace::to_string(b))] = w(0.0, 0.0);
  }
  run.cutoffs["oracle"] = oracle.cutoff;
  run.results = info;
  if (run.cfg.output.empty()) {
    run.out << info.dump(2) << '\n';
  } else {
    write_json(run.data_path, info);
    run.outputs.push_back(run.data_path);
    run.out << "state summary written to " << run.data_path << '\n';
  }
}

void extent_command(Run& run) {
  Table table{"tile-extent", {"backend", "axis", "hwhm", "bracket_lo", "bracket_hi", "iterations", "residual"}, {}};
  for (Backend b : backends_of(run.cfg.backend)) {
    const phasespace::PointEvaluator eval(run.cfg.spec, b, Quantity::wigner);
    run.cutoffs[std::string(phasespace::to_string(b))] = eval.cutoff();
    for (auto axis : run.cfg.axes) {
      const auto rec = metrics::central_tile_extent(eval, axis);
      table.rows.push_back({std::string(phasespace::to_string(b)), std::string(phasespace::to_string(axis)),
                            number(rec.hwhm), number(rec.lo), number(rec.hi), std::to_string(rec.iterations),
                            number(rec.residual)});
      run.out << fmt::format("{:<11} hwhm_{} = {}\n", phasespace::to_string(b), phasespace::to_string(axis),
                             number(rec.hwhm));
    }
  }
  write_table(run.data_path, table, run.cfg.format);
  run.outputs.push_back(run.data_path);
}

void sweep_command(Run& run) {
  const auto list = backends_of(run.cfg.backend);
  const bool several = list.size() > 1;
  for (Backend b : list) {
    const std::string name(phasespace::to_string(b));
    const auto sweep = metrics::extent_sweep(run.cfg.spec, run.cfg.values, b, run.cfg.threads);
    Table table{"sweep", {sweep.parameter_name, "hwhm_x", "hwhm_p", "mean_photon", "status"}, {}};
    for (const auto& row : sweep.rows) {
      table.rows.push_back({number(row.parameter), row.ok ? number(row.hwhm_x) : "", row.ok ? number(row.hwhm_p) : "",
                            row.ok ? number(row.mean_photon) : "", row.ok ? "ok" : "skipped: " + row.note});
    }
    const std::string path = run.path_for(name, several);
    write_table(path, table, run.cfg.format);
    run.outputs.push_back(path);
    auto fit_json = [](const metrics::LineFit& f) {
      return Json{{"slope", f.slope}, {"intercept", f.intercept}, {"slope_stderr", f.slope_stderr}, {"points", f.points}};
    };
    run.results["fit"][name] = {{"x", fit_json(sweep.fit_x)}, {"p", fit_json(sweep.fit_p)}};
    run.out << fmt::format("{:<11} log-log slope vs {}: x {} +- {}, p {} +- {} ({} rows) -> {}\n", name,
                           sweep.parameter_name, number(sweep.fit_x.slope), number(sweep.fit_x.slope_stderr),
                           number(sweep.fit_p.slope), number(sweep.fit_p.slope_stderr), sweep.fit_x.points, path);
  }
}

void photon_stats_command(Run& run) {
  std::vector<int> ns;
  for (double v : run.cfg.values) {
    if (v < 0 || v != std::floor(v) || v > 200) fail(ErrorKind::invalid_argument, "--n: photon numbers must be integers in [0, 200]");
    ns.push_back(static_cast<int>(v));
  }
  const auto rows = metrics::photon_stats_sweep(ns, *run.cfg.spec.r, run.cfg.threads);
  Table table{"photon-stats", {"n", "pasvs", "pssvs", "spasvs", "spssvs"}, {}};
  for (const auto& r : rows) {
    table.rows.push_back({std::to_string(r.n), number(r.pasvs), number(r.pssvs), number(r.spasvs), number(r.spssvs)});
  }
  write_table(run.data_path, table, run.cfg.format);
  run.outputs.push_back(run.data_path);
  run.out << fmt::format("mean photon numbers for {} values of n written to {}\n", rows.size(), run.data_path);
}

void compare_command(Run& run) {
  const RunConfig& cfg = run.cfg;
  StateSpec other = cfg.spec;
  Backend first = Backend::closedform;
  Backend second = Backend::oracle;
  if (cfg.versus) {
    other.family = *cfg.versus;
    if (uses_photons(cfg.spec.family) != uses_photons(other.family) ||
        uses_weights(cfg.spec.family) != uses_weights(other.family) ||
        uses_branch(cfg.spec.family) != uses_branch(other.family) || uses_x0(cfg.spec.family) != uses_x0(other.family)) {
      fail(ErrorKind::invalid_argument, "--versus: family takes different parameters than --family");
    }
    if (cfg.backend == BackendChoice::both) fail(ErrorKind::invalid_argument, "--backend: compare --versus needs one backend");
    first = second = backends_of(cfg.backend).front();
  }
  const auto a = phasespace::evaluate_field(cfg.spec, *cfg.grid, first, cfg.quantity, cfg.threads);
  const auto b = phasespace::evaluate_field(other, *cfg.grid, second, cfg.quantity, cfg.threads);
  run.cutoffs["first"] = a.cutoff;
  run.cutoffs["second"] = b.cutoff;
  const auto s = phasespace::residual_stats(a, b);
  Table table{"compare", {"x", "p", "first", "second", "difference"}, {}};
  const auto& g = *cfg.grid;
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.np; ++j) {
      table.rows.push_back({number(g.x(i)), number(g.p(j)), number(a.at(i, j)), number(b.at(i, j)),
                            number(a.at(i, j) - b.at(i, j))});
    }
  }
  write_table(run.data_path, table, cfg.format);
  run.outputs.push_back(run.data_path);
  run.results["first"] = {{"spec", spec_json(cfg.spec)}, {"backend", phasespace::to_string(first)}};
  run.results["second"] = {{"spec", spec_json(other)}, {"backend", phasespace::to_string(second)}};
  run.results["residual"] = {{"max_abs", s.max_abs}, {"max_rel_to_peak", s.max_rel_to_peak}, {"rms", s.rms}};
  run.out << fmt::format("max_abs {} max_rel_to_peak {} rms {} -> {}\n", number(s.max_abs), number(s.max_rel_to_peak),
                         number(s.rms), run.data_path);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  const auto start = std::chrono::steady_clock::now();
  Run r{cfg, out, {}, Json::object(), Json::object(), {}};
  const std::string ext = cfg.format == Format::csv ? ".csv" : ".json";
  r.data_path = cfg.output.empty() ? std::string(to_string(cfg.command)) + (cfg.command == Command::state ? ".json" : ext)
                                   : cfg.output;
  switch (cfg.command) {
    case Command::state: state_command(r); break;
    case Command::wigner: field_outputs(r, Quantity::wigner); break;
    case Command::overlap: field_outputs(r, Quantity::overlap); break;
    case Command::tile_extent: extent_command(r); break;
    case Command::sweep: sweep_command(r); break;
    case Command::photon_stats: photon_stats_command(r); break;
    case Command::compare: compare_command(r); break;
  }
  if (cfg.command == Command::state && cfg.output.empty()) return kExitOk;

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const fock::CutoffPolicy policy = fock::CutoffPolicy::for_photons(cfg.spec.n.value_or(0));
  Json meta;
  meta["schema"] = std::string("subplanck-sidecar ") + kSchemaVersion;
  meta["version"] = SUBPLANCK_VERSION;
  meta["command"] = to_string(cfg.command);
  meta["config"] = cfg.canonical;
  meta["spec"] = spec_json(cfg.spec);
  meta["backend"] = cfg.canonical.count("backend") ? cfg.canonical.at("backend") : "closedform";
  if (cfg.grid) meta["grid"] = grid_json(*cfg.grid);
  meta["cutoff"] = r.cutoffs;
  meta["tolerances"] = {{"tail_tolerance", policy.tail_tolerance},
                        {"initial_cutoff", policy.initial},
                        {"max_cutoff", policy.max_cutoff},
                        {"bisection", metrics::kBisectionTolerance},
                        {"extent_scan_step", metrics::kExtentScanStep},
                        {"zero_threshold", metrics::kZeroThreshold}};
  meta["threads"] = phasespace::resolve_threads(cfg.threads);
  meta["wall_time_seconds"] = wall;
  meta["outputs"] = r.outputs;
  meta["results"] = r.results;
  const std::string sidecar = path_stem(r.data_path) + ".meta.json";
  write_json(sidecar, meta);
  out << "metadata written to " << sidecar << '\n';
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    // --replay <sidecar>: recorded flags first, explicit ones appended so they win.
    std::optional<std::string> replay;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args_in.size(); ++i) {
      if (args_in[i] == "--replay") {
        if (i + 1 >= args_in.size()) fail(ErrorKind::invalid_argument, "--replay: missing sidecar path");
        replay = args_in[++i];
      } else {
        rest.push_back(args_in[i]);
      }
    }
    if (replay) {
      std::ifstream is(*replay);
      if (!is) fail(ErrorKind::invalid_argument, "--replay: cannot read '" + *replay + "'");
      Json meta;
      try {
        meta = Json::parse(is);
      } catch (const std::exception& e) {
        fail(ErrorKind::invalid_argument, std::string("--replay: ") + e.what());
      }
      const auto& config = meta.at("config");
      args.push_back(config.at("command").get<std::string>());
      std::vector<std::string> overridden;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i].rfind("--", 0) == 0) overridden.push_back(rest[i].substr(2));
      }
      for (const auto& [key, value] : config.items()) {
        if (key == "command" || std::find(overridden.begin(), overridden.end(), key) != overridden.end()) continue;
        args.push_back("--" + key);
        args.push_back(value.get<std::string>());
      }
      args.insert(args.end(), rest.begin(), rest.end());
    } else {
      args = rest;
    }
    const RunConfig cfg = parse_args(args);
    return run(cfg, out, err);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const Error& e) {
    err << "subplanck: " << (e.is_numeric() ? "numeric error [" + std::string(to_string(e.kind())) + "]: " : "")
        << e.what() << '\n';
    return e.is_numeric() ? kExitNumeric : kExitUsage;
  } catch (const std::exception& e) {
    err << "subplanck: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace subplanck::cli
