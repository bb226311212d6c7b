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

#ifndef SUBPLANCK_CLI_CLI_HPP
#define SUBPLANCK_CLI_CLI_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subplanck/phasespace.hpp"
#include "subplanck/state_spec.hpp"

namespace subplanck::cli {

enum class Command { state, wigner, overlap, tile_extent, sweep, photon_stats, compare };
enum class BackendChoice { closedform, oracle, both };
enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

/// Version tag written into every CSV header and sidecar.
inline constexpr const char* kSchemaVersion = "v1";

struct RunConfig {
  Command command = Command::state;
  StateSpec spec;
  std::optional<phasespace::GridSpec> grid;  // default depends on the quantity
  BackendChoice backend = BackendChoice::closedform;
  std::string output;  // data file path; empty = derived from the command
  Format format = Format::csv;
  int threads = 0;     // 0 = hardware concurrency

  // tile-extent
  std::vector<phasespace::Axis> axes{phasespace::Axis::x, phasespace::Axis::p};
  // sweep (n, or x0 for coherent/compass); photon-stats (n)
  std::vector<double> values;
  // compare: second family evaluated with the same parameters, and quantity
  std::optional<Family> versus;
  phasespace::Quantity quantity = phasespace::Quantity::wigner;

  /// Flat key=value form of the flags that produced this config; written
  /// to the sidecar so a run can be replayed.
  std::map<std::string, std::string> canonical;
};

std::string_view to_string(Command command);

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Parses argv (command first) into a RunConfig. Throws subplanck::Error
/// (invalid_argument) naming the offending flag.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs a parsed config; writes artifacts, prints a summary to `out`.
/// Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse + run, mapping failures to exit codes
/// (1 usage, 2 numeric). `--replay <sidecar>` re-runs the flags recorded in
/// a sidecar; other flags given alongside it (typically --output) win.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subplanck::cli

#endif  // SUBPLANCK_CLI_CLI_HPP
