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

#include "output.hpp"

#include <filesystem>
#include <fstream>

#include <fmt/format.h>

#include "subplanck/error.hpp"

namespace subplanck::cli {
namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorKind::invalid_argument, "--output: cannot write '" + path + "'");
  return os;
}

}  // namespace

std::string number(double v) { return fmt::format("{:.17g}", v); }

void write_field(const std::string& path, const phasespace::ScalarField& field, Format format) {
  std::ofstream os = open_output(path);
  const auto& g = field.grid;
  if (format == Format::csv) {
    os << "# subplanck-field " << kSchemaVersion << " quantity=" << phasespace::to_string(field.quantity)
       << " backend=" << phasespace::to_string(field.backend)
       << " normalization=" << (field.normalized ? "origin" : "physical") << '\n';
    os << (field.quantity == phasespace::Quantity::wigner ? "x,p,value\n" : "dx,dp,value\n");
    for (int i = 0; i < g.nx; ++i) {
      const std::string x = number(g.x(i));
      for (int j = 0; j < g.np; ++j) os << x << ',' << number(g.p(j)) << ',' << number(field.at(i, j)) << '\n';
    }
    return;
  }
  Json doc;
  doc["schema"] = std::string("subplanck-field ") + kSchemaVersion;
  doc["quantity"] = phasespace::to_string(field.quantity);
  doc["backend"] = phasespace::to_string(field.backend);
  doc["normalized"] = field.normalized;
  doc["origin_value"] = field.origin_value;
  doc["grid"] = grid_json(g);
  Json rows = Json::array();
  for (int i = 0; i < g.nx; ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.np; ++j) row.push_back(field.at(i, j));
    rows.push_back(std::move(row));
  }
  doc["values"] = std::move(rows);
  os << doc.dump(1) << '\n';
}

void write_table(const std::string& path, const Table& table, Format format) {
  std::ofstream os = open_output(path);
  if (format == Format::csv) {
    os << "# subplanck-" << table.kind << ' ' << kSchemaVersion << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
      os << '\n';
    }
    return;
  }
  Json doc;
  doc["schema"] = "subplanck-" + table.kind + " " + kSchemaVersion;
  doc["columns"] = table.columns;
  doc["rows"] = table.rows;
  os << doc.dump(1) << '\n';
}

void write_json(const std::string& path, const Json& doc) {
  std::ofstream os = open_output(path);
  os << doc.dump(2) << '\n';
}

Json spec_json(const StateSpec& spec) {
  Json j;
  j["family"] = to_string(spec.family);
  if (spec.n) j["n"] = *spec.n;
  if (spec.r) j["r"] = *spec.r;
  if (spec.branch) j["branch"] = to_string(*spec.branch);
  if (spec.c1) j["c1"] = {spec.c1->real(), spec.c1->imag()};
  if (spec.c2) j["c2"] = {spec.c2->real(), spec.c2->imag()};
  if (spec.x0) j["x0"] = *spec.x0;
  j["normalization"] = to_string(spec.normalization);
  return j;
}

Json grid_json(const phasespace::GridSpec& g) {
  return Json{{"x_min", g.x_min}, {"x_max", g.x_max}, {"p_min", g.p_min},
              {"p_max", g.p_max}, {"nx", g.nx},       {"np", g.np}};
}

std::string path_stem(const std::string& path) {
  const std::filesystem::path p(path);
  return (p.parent_path() / p.stem()).string();
}

std::string with_suffix(const std::string& path, const std::string& tag) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + "." + tag + p.extension().string())).string();
}

}  // namespace subplanck::cli
