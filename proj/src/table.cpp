// Copyright 2026 The arcperc Authors
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

#include "arcperc/table.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

#include "arcperc/error.hpp"

namespace arcperc::table {
using Json = nlohmann::ordered_json;
namespace {

// Field i of a row, as text (empty when unset) and as JSON (null when unset).
struct Cell {
  std::string text;
  Json value;
};

Cell cell(const std::optional<double>& v) {
  if (!v) return {"", nullptr};
  return {format_number(*v), *v};
}
Cell cell(const std::optional<std::uint64_t>& v) {
  if (!v) return {"", nullptr};
  return {std::to_string(*v), *v};
}
Cell cell(const std::optional<std::string>& v) {
  if (!v) return {"", nullptr};
  return {*v, *v};
}

std::vector<Cell> cells(const Row& r) {
  return {{r.experiment, r.experiment},
          cell(r.kappa), cell(r.theta), cell(r.x0), cell(r.y0), cell(r.delta), cell(r.n), cell(r.method),
          cell(r.p_hat), cell(r.se), cell(r.ci_low), cell(r.ci_high), cell(r.formula), cell(r.z), cell(r.seed),
          cell(r.p_hat_x), cell(r.bias), cell(r.bias_bound), cell(r.rejected), cell(r.step), cell(r.escape),
          {ARCPERC_VERSION, ARCPERC_VERSION}};
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw DomainError("format must be csv or json (got '" + text + "')");
}

const std::vector<std::string>& columns() {
  static const std::vector<std::string> names = {
      "experiment", "kappa", "theta", "x0",      "y0",   "delta",      "n",        "method",
      "p_hat",      "se",    "ci_low", "ci_high", "formula", "z",      "seed",     "p_hat_x",
      "bias",       "bias_bound", "rejected", "step", "escape", "version"};
  return names;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  const auto& cols = columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const Row& r : rows) {
    const auto cs = cells(r);
    for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << cs[i].text;
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<Row>& rows) {
  Json doc = Json::array();
  const auto& cols = columns();
  for (const Row& r : rows) {
    const auto cs = cells(r);
    Json o = Json::object();
    for (std::size_t i = 0; i < cs.size(); ++i) o[cols[i]] = cs[i].value;
    doc.push_back(o);
  }
  out << doc.dump(2) << '\n';
}

void write(std::ostream& out, const std::vector<Row>& rows, Format format) {
  if (format == Format::csv) {
    write_csv(out, rows);
  } else {
    write_json(out, rows);
  }
}

}  // namespace arcperc::table
