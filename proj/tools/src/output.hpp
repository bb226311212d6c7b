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

#ifndef SUBPLANCK_CLI_OUTPUT_HPP
#define SUBPLANCK_CLI_OUTPUT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "subplanck/phasespace.hpp"
#include "subplanck_cli/cli.hpp"

namespace subplanck::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits, enough to round-trip a double.
std::string number(double v);

struct Table {
  std::string kind;  // goes into the version line, e.g. "sweep"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_field(const std::string& path, const phasespace::ScalarField& field, Format format);
void write_table(const std::string& path, const Table& table, Format format);
void write_json(const std::string& path, const Json& doc);

Json spec_json(const StateSpec& spec);
Json grid_json(const phasespace::GridSpec& grid);

/// "dir/name.csv" -> "dir/name"; the sidecar is stem + ".meta.json".
std::string path_stem(const std::string& path);
std::string with_suffix(const std::string& path, const std::string& tag);

}  // namespace subplanck::cli

#endif  // SUBPLANCK_CLI_OUTPUT_HPP
