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

// Named invariant checks, each reporting the measured value and its bound.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arcperc::verify {

struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct Options {
  /// "all" or one of suite_names().
  std::string suite = "all";
  /// Empty, or "f-sign": evaluate f at |w| so that f is even.
  std::string fault;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

const std::vector<std::string>& suite_names();
const std::vector<std::string>& fault_names();

/// Throws DomainError for an unknown suite or fault name.
std::vector<Check> run(const Options& options);

/// One line per check, then a summary line.
void print_report(std::ostream& out, const std::vector<Check>& checks);

bool all_passed(const std::vector<Check>& checks);

}  // namespace arcperc::verify
