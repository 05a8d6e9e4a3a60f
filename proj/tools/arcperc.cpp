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

// arcperc: exact formulas and Monte Carlo checks for SLE left passage and
// percolation arc events.

#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcperc/diffusion.hpp"
#include "arcperc/error.hpp"
#include "arcperc/formulas.hpp"
#include "arcperc/montecarlo.hpp"
#include "arcperc/percolation.hpp"
#include "arcperc/table.hpp"
#include "arcperc/verify.hpp"

namespace {

using namespace arcperc;

enum Exit { kOk = 0, kVerifyFailed = 1, kDomain = 2, kBudget = 3 };

// Numbers like "1.5", "pi/2", "3*pi/2", "-2pi/3", "1/75".
class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  double parse() {
    const double v = product();
    skip();
    if (pos_ != s_.size()) fail();
    return v;
  }

 private:
  double product() {
    double v = factor();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        v *= factor();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        v /= factor();
      } else if (pos_ + 1 < s_.size() && s_.compare(pos_, 2, "pi") == 0) {
        v *= factor();  // implicit product, as in "2pi"
      } else {
        return v;
      }
    }
  }

  double factor() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      const bool neg = s_[pos_++] == '-';
      const double v = factor();
      return neg ? -v : v;
    }
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return std::numbers::pi;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail();
    }
    pos_ += used;
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const { throw DomainError("cannot read number '" + s_ + "'"); }

  std::string s_;
  std::size_t pos_ = 0;
};

double parse_number(const std::string& text) { return ExprParser(text).parse(); }

std::vector<double> parse_numbers(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& item : items) out.push_back(parse_number(item));
  return out;
}

struct Common {
  std::uint64_t seed = 0;
  unsigned workers = mc::default_workers();
  std::string format = "csv";
  std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "master seed")->capture_default_str();
  cmd->add_option("--workers", c.workers, "worker threads (env ARCPERC_WORKERS)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", c.output, "write the table here instead of stdout");
}

void emit(const Common& c, const std::vector<table::Row>& rows) {
  const table::Format fmt = table::parse_format(c.format);
  if (c.output.empty()) {
    table::write(std::cout, rows, fmt);
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + c.output + "'");
  table::write(file, rows, fmt);
}

void fill_estimate(table::Row& row, const mc::McEstimate& e, double formula) {
  row.n = e.n;
  row.p_hat = e.p_hat;
  row.se = e.std_err;
  row.ci_low = e.ci_low;
  row.ci_high = e.ci_high;
  row.formula = formula;
  row.z = e.std_err > 0.0 ? (e.p_hat - formula) / e.std_err : 0.0;
  row.bias = e.p_hat - formula;
  row.seed = e.seed;
  row.rejected = e.rejected;
}

// ---------------------------------------------------------------------------

struct FormulaArgs {
  Common common;
  std::vector<std::string> kappa, x0, y0, theta;
};

int run_formula(const FormulaArgs& a) {
  std::vector<table::Row> rows;
  for (double theta : parse_numbers(a.theta)) {
    table::Row row;
    row.experiment = "formula-arc";
    row.theta = theta;
    row.formula = formulas::arc_event_probability({theta});
    rows.push_back(row);
  }
  if (!a.kappa.empty() || !a.x0.empty()) {
    if (a.kappa.empty() || a.x0.empty()) throw DomainError("formula needs --kappa and --x0 together");
    const std::vector<double> y0s = a.y0.empty() ? std::vector<double>{1.0} : parse_numbers(a.y0);
    for (double kappa : parse_numbers(a.kappa)) {
      for (double x0 : parse_numbers(a.x0)) {
        for (double y0 : y0s) {
          table::Row row;
          row.experiment = "formula-left-passage";
          row.kappa = kappa;
          row.x0 = x0;
          row.y0 = y0;
          row.formula = formulas::left_passage_probability(kappa, {x0, y0});
          rows.push_back(row);
        }
      }
    }
  }
  if (rows.empty()) throw DomainError("formula needs --theta, or --kappa with --x0 [--y0]");
  emit(a.common, rows);
  return kOk;
}

struct SleArgs {
  Common common;
  std::vector<std::string> kappa{"6"}, x0{"0"}, y0{"1"};
  std::string method = "both";
  std::uint64_t n = 100000;
  double step = diffusion::SdeParams{}.step;
  double escape = diffusion::SdeParams{}.escape;
  std::uint64_t max_steps = diffusion::SdeParams{}.max_steps;
};

int run_sle(const SleArgs& a) {
  std::vector<diffusion::Method> methods;
  if (a.method == "both") {
    methods = {diffusion::Method::w_diffusion, diffusion::Method::loewner};
  } else {
    methods = {diffusion::parse_method(a.method.c_str())};
  }
  std::vector<table::Row> rows;
  for (double kappa : parse_numbers(a.kappa)) {
    for (double x0 : parse_numbers(a.x0)) {
      for (double y0 : parse_numbers(a.y0)) {
        for (diffusion::Method m : methods) {
          diffusion::SdeParams params;
          params.kappa = kappa;
          params.step = a.step;
          params.escape = a.escape;
          params.max_steps = a.max_steps;
          const formulas::HalfPlanePoint p{x0, y0};
          const double formula = formulas::left_passage_probability(kappa, p);
          const mc::McEstimate e =
              diffusion::estimate_left_passage_mc(params, p, a.n, a.common.seed, m, a.common.workers);
          table::Row row;
          row.experiment = "sle-left-passage";
          row.kappa = kappa;
          row.x0 = x0;
          row.y0 = y0;
          row.method = diffusion::to_string(m);
          fill_estimate(row, e, formula);
          row.bias_bound = kappa < 8.0 ? diffusion::escape_bias_bound(kappa, a.escape) : 0.0;
          row.step = a.step;
          row.escape = a.escape;
          rows.push_back(row);
        }
      }
    }
  }
  emit(a.common, rows);
  return kOk;
}

struct ArcArgs {
  Common common;
  std::vector<std::string> theta{"pi/2", "pi", "3*pi/2"};
  std::string delta = "1/75";
  std::uint64_t n = 20000;
};

int run_arc(const ArcArgs& a) {
  const double delta = parse_number(a.delta);
  if (!(delta > 0.0 && delta <= 0.1)) {
    throw DomainError("arc-sweep: delta must lie in (0, 0.1] (got " + a.delta + ")");
  }
  const std::vector<double> thetas = parse_numbers(a.theta);
  for (double theta : thetas) formulas::arc_event_probability({theta});  // range check
  const percolation::DiskLattice lattice(delta);
  const auto estimates = percolation::estimate_arc_sweep(lattice, thetas, a.n, a.common.seed, a.common.workers);
  std::vector<table::Row> rows;
  for (const auto& e : estimates) {
    if (e.identity_violations != 0) {
      throw std::logic_error("per-sample event identity violated; this is a bug");
    }
    table::Row row;
    row.experiment = "arc-sweep";
    row.theta = e.theta;
    row.delta = delta;
    fill_estimate(row, e.indicator, formulas::arc_event_probability({e.theta}));
    row.p_hat_x = e.x_mean.p_hat;
    row.rejected = e.margin_resamples;
    rows.push_back(row);
  }
  emit(a.common, rows);
  return kOk;
}

struct VerifyArgs {
  verify::Options options;
};

int run_verify(const VerifyArgs& a) {
  const auto checks = verify::run(a.options);
  verify::print_report(std::cout, checks);
  return verify::all_passed(checks) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact formulas and Monte Carlo checks for SLE left passage and percolation arc events"};
  app.set_version_flag("--version", ARCPERC_VERSION);
  app.require_subcommand(1);

  FormulaArgs fa;
  auto* formula = app.add_subcommand("formula", "evaluate the exact formulas, no simulation");
  formula->add_option("--kappa", fa.kappa, "kappa values")->delimiter(',');
  formula->add_option("--x0", fa.x0, "real parts of z0")->delimiter(',');
  formula->add_option("--y0", fa.y0, "imaginary parts of z0 (default 1)")->delimiter(',');
  formula->add_option("--theta", fa.theta, "arc angles, e.g. pi/2")->delimiter(',');
  add_common(formula, fa.common);

  SleArgs sa;
  auto* sle = app.add_subcommand("sle-left-passage", "Monte Carlo left-passage estimates");
  sle->add_option("--kappa", sa.kappa, "kappa values in (0, 8]")->delimiter(',')->capture_default_str();
  sle->add_option("--x0", sa.x0, "real parts of z0")->delimiter(',')->capture_default_str();
  sle->add_option("--y0", sa.y0, "imaginary parts of z0")->delimiter(',')->capture_default_str();
  sle->add_option("--method", sa.method, "w_diffusion, loewner or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"w_diffusion", "loewner", "both"}));
  sle->add_option("--n", sa.n, "paths per row")->capture_default_str();
  sle->add_option("--step", sa.step, "integration step")->capture_default_str();
  sle->add_option("--escape", sa.escape, "|w| escape threshold")->capture_default_str();
  sle->add_option("--max-steps", sa.max_steps, "step cap per path")->capture_default_str();
  add_common(sle, sa.common);

  ArcArgs aa;
  auto* arc = app.add_subcommand("arc-sweep", "percolation estimates of the arc event");
  arc->add_option("--theta", aa.theta, "arc angles in (0, 2 pi)")->delimiter(',')->capture_default_str();
  arc->add_option("--delta", aa.delta, "lattice mesh, at most 0.1")->capture_default_str();
  arc->add_option("--n", aa.n, "colourings")->capture_default_str();
  add_common(arc, aa.common);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  ver->add_option("--suite", va.options.suite, "all or one suite name")
      ->capture_default_str();
  ver->add_option("--inject-fault", va.options.fault, "deliberately break a component (f-sign)");
  ver->add_option("--seed", va.options.seed, "seed for sampled checks")->capture_default_str();
  va.options.workers = mc::default_workers();
  ver->add_option("--workers", va.options.workers, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomain;
  }

  try {
    if (*formula) return run_formula(fa);
    if (*sle) return run_sle(sa);
    if (*arc) return run_arc(aa);
    if (*ver) return run_verify(va);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  }
  return kDomain;
}
