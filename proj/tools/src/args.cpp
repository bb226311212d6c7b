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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "output.hpp"
#include "subplanck/error.hpp"
#include "subplanck_cli/cli.hpp"

namespace subplanck::cli {
namespace {

[[noreturn]] void usage(const std::string& msg) { fail(ErrorKind::invalid_argument, msg); }

double parse_real(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    usage(flag + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) usage(flag + ": '" + text + "' is not a finite number");
  return v;
}

// Accepts "0.6", "0.6+0.8i", "-0.8i", "i", "(0.6,0.8)".
Complex parse_complex(std::string text, const std::string& flag) {
  std::erase(text, ' ');
  if (text.empty()) usage(flag + ": empty value");
  if (text.front() == '(' && text.back() == ')') {
    const auto comma = text.find(',');
    if (comma == std::string::npos) usage(flag + ": expected (re,im)");
    return {parse_real(text.substr(1, comma - 1), flag), parse_real(text.substr(comma + 1, text.size() - comma - 2), flag)};
  }
  if (text.back() != 'i' && text.back() != 'j') return {parse_real(text, flag), 0.0};
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : text.substr(0, split);
  std::string im = split == std::string::npos ? text : text.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, flag), parse_real(im, flag)};
}

// "a:b" (step 1), "a:b:step" or "v1,v2,...".
std::vector<double> parse_values(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3) usage(flag + ": expected a:b or a:b:step");
    const double a = parse_real(parts[0], flag);
    const double b = parse_real(parts[1], flag);
    const double step = parts.size() == 3 ? parse_real(parts[2], flag) : 1.0;
    if (!(step > 0.0) || b < a) usage(flag + ": empty or descending range");
    const int count = static_cast<int>(std::floor((b - a) / step + 1e-9)) + 1;
    for (int k = 0; k < count; ++k) out.push_back(a + k * step);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_real(item, flag));
  if (out.empty()) usage(flag + ": no values");
  return out;
}

Command parse_command(const std::string& name) {
  if (name == "state") return Command::state;
  if (name == "wigner") return Command::wigner;
  if (name == "overlap") return Command::overlap;
  if (name == "tile-extent") return Command::tile_extent;
  if (name == "sweep") return Command::sweep;
  if (name == "photon-stats") return Command::photon_stats;
  if (name == "compare") return Command::compare;
  usage("unknown command '" + name + "'");
}

template <typename F>
auto flag_guard(const std::string& flag, F f) {
  try {
    return f();
  } catch (const Error& e) {
    usage(flag + ": " + e.what());
  }
}

struct RawFlags {
  std::string command;
  std::optional<std::string> family, n, r, branch, c1, c2, x0, normalization;
  std::optional<double> x_min, x_max, p_min, p_max;
  std::optional<int> nx, np, points;
  std::optional<std::string> backend, format, axis, values, versus, quantity;
  std::string output;
  int threads = 0;
};

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::state: return "state";
    case Command::wigner: return "wigner";
    case Command::overlap: return "overlap";
    case Command::tile_extent: return "tile-extent";
    case Command::sweep: return "sweep";
    case Command::photon_stats: return "photon-stats";
    case Command::compare: return "compare";
  }
  return "unknown";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"subplanck: Wigner functions, sub-Planck structure and displacement sensitivity of "
               "squeezed photon-added/subtracted states"};
  app.set_config("--config", "", "flat key=value file with any of the flags below (without dashes)");
  RawFlags f;
  app.add_option("command", f.command, "state | wigner | overlap | tile-extent | sweep | photon-stats | compare")
      ->required();
  app.add_option("--family", f.family, "coherent, compass, svs, pasvs, pssvs, spasvs, spssvs, mix_pa, mix_ps");
  app.add_option("--n", f.n, "photons added/subtracted (default 10); sweep/photon-stats accept a:b or lists");
  app.add_option("--r", f.r, "squeeze parameter (default 0.5)");
  app.add_option("--branch", f.branch, "+ or - squeezing branch for svs/pasvs/pssvs (default +)");
  app.add_option("--c1", f.c1, "weight of the +r component, e.g. 0.70710678 or 0.6+0.8i (default 1/sqrt2)");
  app.add_option("--c2", f.c2, "weight of the -r component (default sqrt(1-|c1|^2))");
  app.add_option("--x0", f.x0, "coherent displacement or compass size (defaults 0 / 12); sweep accepts a:b");
  app.add_option("--normalization", f.normalization, "origin (default) or physical (Wigner per dx dp)");
  app.add_option("--x-min", f.x_min, "grid lower x (default -6 Wigner, -1.5 overlap)");
  app.add_option("--x-max", f.x_max, "grid upper x");
  app.add_option("--p-min", f.p_min, "grid lower p");
  app.add_option("--p-max", f.p_max, "grid upper p");
  app.add_option("--nx", f.nx, "grid points along x (default 241 Wigner, 121 overlap; odd keeps the origin)");
  app.add_option("--np", f.np, "grid points along p");
  app.add_option("--points", f.points, "grid points along both axes");
  app.add_option("--backend", f.backend, "closedform (default), oracle or both");
  app.add_option("--output", f.output, "data file; the metadata sidecar goes next to it as <stem>.meta.json");
  app.add_option("--format", f.format, "csv (default) or json");
  app.add_option("--threads", f.threads, "worker threads, 0 = all cores (default 0)")->check(CLI::NonNegativeNumber);
  app.add_option("--axis", f.axis, "tile-extent axis: x, p or both (default both)");
  app.add_option("--values", f.values, "sweep parameter values (n, or x0 for compass), a:b[:step] or list");
  app.add_option("--versus", f.versus, "compare: second family with the same parameters");
  app.add_option("--quantity", f.quantity, "compare: wigner (default) or overlap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  RunConfig cfg;
  cfg.command = parse_command(f.command);
  auto& canon = cfg.canonical;
  canon["command"] = f.command;
  cfg.threads = f.threads;
  canon["threads"] = std::to_string(f.threads);
  cfg.output = f.output;

  if (f.backend) {
    if (*f.backend == "closedform") cfg.backend = BackendChoice::closedform;
    else if (*f.backend == "oracle") cfg.backend = BackendChoice::oracle;
    else if (*f.backend == "both") cfg.backend = BackendChoice::both;
    else usage("--backend: expected closedform, oracle or both");
  }
  canon["backend"] = f.backend.value_or("closedform");
  if (f.format) {
    if (*f.format == "csv") cfg.format = Format::csv;
    else if (*f.format == "json") cfg.format = Format::json;
    else usage("--format: expected csv or json");
  }
  canon["format"] = f.format.value_or("csv");

  const bool sweep_like = cfg.command == Command::sweep || cfg.command == Command::photon_stats;

  // --- state spec ---
  if (cfg.command == Command::photon_stats) {
    if (f.family) usage("--family is not used by photon-stats");
    cfg.spec = StateSpec::pair(Family::spasvs, 0, 0.5, Complex(1.0 / kSqrt2, 0.0));
  } else {
    const std::string fam = f.family.value_or("spasvs");
    cfg.spec.family = flag_guard("--family", [&] { return family_from_string(fam); });
    canon["family"] = fam;
  }
  const Family family = cfg.spec.family;
  const bool photons = cfg.command == Command::photon_stats || uses_photons(family);
  auto reject = [&](const auto& field, bool wanted, const char* flag) {
    if (field && !wanted) usage(std::string(flag) + " is not used by family " + std::string(to_string(family)));
  };
  reject(f.n, photons, "--n");
  reject(f.r, uses_squeezing(family) || cfg.command == Command::photon_stats, "--r");
  reject(f.branch, uses_branch(family), "--branch");
  reject(f.c1, uses_weights(family) && cfg.command != Command::photon_stats, "--c1");
  reject(f.c2, uses_weights(family) && cfg.command != Command::photon_stats, "--c2");
  reject(f.x0, uses_x0(family), "--x0");

  // The swept parameter may be given with --values or as a range on its own flag.
  std::optional<std::string> sweep_text = f.values;
  if (sweep_like) {
    std::optional<std::string>& own = uses_x0(family) && cfg.command == Command::sweep ? f.x0 : f.n;
    if (own && sweep_text) usage("--values and --" + std::string(&own == &f.x0 ? "x0" : "n") + " both give the sweep");
    if (own) {
      sweep_text = own;
      own.reset();
    }
    if (!sweep_text) {
      if (cfg.command == Command::photon_stats) sweep_text = "0:20";
      else sweep_text = uses_x0(family) ? "4:16" : "10,15,20";
    }
    cfg.values = parse_values(*sweep_text, "--values");
    canon["values"] = *sweep_text;
  } else if (f.values) {
    usage("--values is only used by sweep and photon-stats");
  }

  if (photons && cfg.command != Command::photon_stats) {
    const double n = f.n ? parse_real(*f.n, "--n") : (sweep_like ? cfg.values.front() : 10.0);
    if (n < 0 || n > 200 || n != std::floor(n)) usage("--n: must be an integer in [0, 200]");
    cfg.spec.n = static_cast<int>(n);
    if (!sweep_like) canon["n"] = std::to_string(*cfg.spec.n);
  }
  if (uses_squeezing(family) || cfg.command == Command::photon_stats) {
    const double r = f.r ? parse_real(*f.r, "--r") : 0.5;
    if (r < 0.0 || r > 3.0) usage("--r: must be in [0, 3]");
    cfg.spec.r = r;
    canon["r"] = number(r);
  }
  if (uses_branch(family)) {
    cfg.spec.branch = flag_guard("--branch", [&] { return branch_from_string(f.branch.value_or("+")); });
    canon["branch"] = std::string(to_string(*cfg.spec.branch));
  }
  if (uses_weights(family) && cfg.command != Command::photon_stats) {
    const Complex c1 = f.c1 ? parse_complex(*f.c1, "--c1") : Complex(1.0 / kSqrt2, 0.0);
    if (std::norm(c1) > 1.0 + 1e-6) usage("--c1: |c1| must not exceed 1");
    const Complex c2 = f.c2 ? parse_complex(*f.c2, "--c2") : Complex(std::sqrt(std::max(0.0, 1.0 - std::norm(c1))), 0.0);
    if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-6) usage("--c1/--c2: |c1|^2 + |c2|^2 must equal 1");
    cfg.spec.c1 = c1;
    cfg.spec.c2 = c2;
    canon["c1"] = "(" + number(c1.real()) + "," + number(c1.imag()) + ")";
    canon["c2"] = "(" + number(c2.real()) + "," + number(c2.imag()) + ")";
  }
  if (uses_x0(family) && !(sweep_like && cfg.command == Command::sweep)) {
    const double x0 = f.x0 ? parse_real(*f.x0, "--x0") : (family == Family::compass ? 12.0 : 0.0);
    if (family == Family::compass && !(x0 > 0.0)) usage("--x0: compass needs x0 > 0");
    cfg.spec.x0 = x0;
    canon["x0"] = number(x0);
  } else if (uses_x0(family)) {
    cfg.spec.x0 = cfg.values.front();
  }
  if (f.normalization) {
    cfg.spec.normalization = flag_guard("--normalization", [&] { return normalization_from_string(*f.normalization); });
  }
  canon["normalization"] = std::string(to_string(cfg.spec.normalization));
  flag_guard("--family", [&] {
    cfg.spec.validate();
    return 0;
  });

  // --- command-specific ---
  if (f.quantity) {
    if (cfg.command != Command::compare) usage("--quantity is only used by compare");
    cfg.quantity = flag_guard("--quantity", [&] { return phasespace::quantity_from_string(*f.quantity); });
    canon["quantity"] = *f.quantity;
  }
  if (cfg.command == Command::overlap) cfg.quantity = phasespace::Quantity::overlap;
  if (f.axis) {
    if (cfg.command != Command::tile_extent) usage("--axis is only used by tile-extent");
    if (*f.axis == "both") cfg.axes = {phasespace::Axis::x, phasespace::Axis::p};
    else cfg.axes = {flag_guard("--axis", [&] { return phasespace::axis_from_string(*f.axis); })};
    canon["axis"] = *f.axis;
  }
  if (f.versus) {
    if (cfg.command != Command::compare) usage("--versus is only used by compare");
    cfg.versus = flag_guard("--versus", [&] { return family_from_string(*f.versus); });
    canon["versus"] = *f.versus;
  }

  // --- grid ---
  const bool any_grid = f.x_min || f.x_max || f.p_min || f.p_max || f.nx || f.np || f.points;
  const bool gridded = cfg.command == Command::wigner || cfg.command == Command::overlap || cfg.command == Command::compare;
  if (any_grid && !gridded) usage("grid flags are only used by wigner, overlap and compare");
  if (gridded) {
    phasespace::GridSpec g = cfg.quantity == phasespace::Quantity::overlap ? phasespace::GridSpec::overlap_default()
                                                                           : phasespace::GridSpec::wigner_default();
    if (f.points && (f.nx || f.np)) usage("--points conflicts with --nx/--np");
    if (f.points) g.nx = g.np = *f.points;
    if (f.nx) g.nx = *f.nx;
    if (f.np) g.np = *f.np;
    if (f.x_min) g.x_min = *f.x_min;
    if (f.x_max) g.x_max = *f.x_max;
    if (f.p_min) g.p_min = *f.p_min;
    if (f.p_max) g.p_max = *f.p_max;
    flag_guard("grid flags", [&] {
      g.validate();
      return 0;
    });
    cfg.grid = g;
    canon["x-min"] = number(g.x_min);
    canon["x-max"] = number(g.x_max);
    canon["p-min"] = number(g.p_min);
    canon["p-max"] = number(g.p_max);
    canon["nx"] = std::to_string(g.nx);
    canon["np"] = std::to_string(g.np);
  }

  if (!cfg.output.empty()) {
    const std::filesystem::path parent = std::filesystem::path(cfg.output).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
      usage("--output: directory '" + parent.string() + "' does not exist");
    }
  }
  return cfg;
}

}  // namespace subplanck::cli
