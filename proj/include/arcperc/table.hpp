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

#pragma once

// Flat result rows shared by every subcommand, written as CSV or JSON.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arcperc::table {

struct Row {
  std::string experiment;
  std::optional<double> kappa, theta, x0, y0, delta;
  std::optional<std::uint64_t> n;
  std::optional<std::string> method;
  std::optional<double> p_hat, se, ci_low, ci_high, formula, z;
  std::optional<std::uint64_t> seed;
  // Extra columns after the fixed block.
  std::optional<double> p_hat_x, bias, bias_bound;
  std::optional<std::uint64_t> rejected;
  std::optional<double> step, escape;
};

enum class Format { csv, json };

Format parse_format(const std::string& text);

/// Column names in output order.
const std::vector<std::string>& columns();

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

void write_csv(std::ostream& out, const std::vector<Row>& rows);
void write_json(std::ostream& out, const std::vector<Row>& rows);
void write(std::ostream& out, const std::vector<Row>& rows, Format format);

}  // namespace arcperc::table
