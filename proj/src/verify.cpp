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

#include "arcperc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

#include "arcperc/error.hpp"
#include "arcperc/formulas.hpp"
#include "arcperc/montecarlo.hpp"
#include "arcperc/percolation.hpp"
#include "arcperc/specialfn.hpp"

namespace arcperc::verify {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using formulas::HalfPlanePoint;
using LeftPassage = std::function<double(double, HalfPlanePoint)>;

struct Context {
  const Options& options;
  LeftPassage lp;
  std::vector<Check>& out;

  void add(const std::string& suite, const std::string& name, double measured, double bound) {
    out.push_back({suite, name, measured, bound, measured <= bound});
  }
};

// Left-passage probability with f replaced by an even function.
double lp_even_f(double kappa, HalfPlanePoint p) {
  if (kappa == 8.0) return 0.5;
  const double w = std::abs(p.x0 / p.y0);
  return std::clamp(0.5 + specialfn::schramm_f(kappa, w) / (2.0 * specialfn::f_limit(kappa)), 0.0, 1.0);
}

// 10^3 points with x0/y0 spread over [-10, 10] and varying scale.
std::vector<HalfPlanePoint> point_grid() {
  std::vector<HalfPlanePoint> pts;
  for (int i = 0; i < 1000; ++i) {
    const double ratio = -10.0 + 20.0 * i / 999.0;
    const double y0 = 0.25 + 3.75 * ((i * 37) % 101) / 100.0;
    pts.push_back({ratio * y0, y0});
  }
  return pts;
}

std::vector<double> theta_grid(int n) {
  std::vector<double> t;
  for (int i = 1; i <= n; ++i) t.push_back(kTwoPi * i / (n + 1));
  return t;
}

void suite_specialcases(Context& ctx) {
  const auto pts = point_grid();
  for (double kappa : {2.0, 8.0 / 3.0, 4.0, 8.0}) {
    double worst = 0.0;
    for (const auto& p : pts) {
      worst = std::max(worst, std::abs(ctx.lp(kappa, p) - formulas::left_passage_closed_form(kappa, p)));
    }
    char name[64];
    std::snprintf(name, sizeof name, "closed-form kappa=%s",
                  kappa == 8.0 / 3.0 ? "8/3" : (kappa == 2.0 ? "2" : (kappa == 4.0 ? "4" : "8")));
    ctx.add("specialcases", name, worst, 1e-9);
  }
}

void suite_ode(Context& ctx) {
  const double h = 1e-4;
  for (double kappa : {2.0, 3.0, 6.0, 7.5}) {
    // Normalized solution with h(-inf) = 0, h(+inf) = 1.
    auto g = [&](double w) { return ctx.lp(kappa, {w, 1.0}); };
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double w = -5.0 + 10.0 * i / 1000.0;
      const double gp = (g(w + h) - g(w - h)) / (2.0 * h);
      const double gpp = (g(w + h) - 2.0 * g(w) + g(w - h)) / (h * h);
      worst = std::max(worst, std::abs(0.5 * kappa * gpp + 4.0 * w / (w * w + 1.0) * gp));
    }
    char name[64];
    std::snprintf(name, sizeof name, "ode-residual kappa=%g", kappa);
    ctx.add("ode", name, worst, 1e-5);
  }
}

void suite_linkage(Context& ctx) {
  double link = 0.0, complement = 0.0;
  for (double theta : theta_grid(1000)) {
    const double p = formulas::arc_event_probability({theta});
    link = std::max(link, std::abs(p - ctx.lp(6.0, formulas::theta_to_halfplane_point({theta}))));
    complement = std::max(complement, std::abs(p + formulas::arc_event_probability({kTwoPi - theta}) - 1.0));
  }
  ctx.add("linkage", "arc-vs-left-passage", link, 1e-12);
  ctx.add("linkage", "arc-complement", complement, 1e-12);
}

void suite_symmetry(Context& ctx) {
  double reflection = 0.0, scale = 0.0, range = 0.0;
  for (double kappa : {0.5, 2.0, 8.0 / 3.0, 3.0, 4.0, 6.0, 7.5, 8.0}) {
    for (double x0 : {-7.0, -2.0, -0.3, 0.0, 0.1, 1.0, 4.5, 50.0}) {
      for (double y0 : {0.2, 1.0, 3.0}) {
        const double p = ctx.lp(kappa, {x0, y0});
        reflection = std::max(reflection, std::abs(p + ctx.lp(kappa, {-x0, y0}) - 1.0));
        for (double s : {1e-3, 0.5, 7.0, 1e4}) {
          scale = std::max(scale, std::abs(ctx.lp(kappa, {s * x0, s * y0}) - p));
        }
        range = std::max(range, std::max(-p, p - 1.0));
      }
    }
  }
  double previous = -1.0;
  double drops = 0.0;
  for (double theta : theta_grid(1000)) {
    const double p = formulas::arc_event_probability({theta});
    if (!(p > previous)) drops += 1.0;
    range = std::max(range, std::max(-p, p - 1.0));
    previous = p;
  }
  ctx.add("symmetry", "reflection", reflection, 1e-12);
  ctx.add("symmetry", "scale-invariance", scale, 1e-12);
  ctx.add("symmetry", "arc-monotone-violations", drops, 0.0);
  ctx.add("symmetry", "range-excess", std::max(range, 0.0), 0.0);
}

void suite_percolation(Context& ctx) {
  using namespace percolation;
  const DiskLattice lattice(1.0 / 30.0);
  const BoundaryArc quarter{0.0, kPi / 2.0};
  const BoundaryArc three_quarters{0.0, 3.0 * kPi / 2.0};
  const BoundaryArc rest{kPi / 2.0, 3.0 * kPi / 2.0};
  const std::uint64_t n = 1000;
  double identity = 0, monotone = 0, tracer = 0, x_complement = 0, swap = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Coloring coloring = sample_coloring(lattice, ctx.options.seed, i);
    ConfigurationAnalysis analysis(lattice, coloring);
    for (const BoundaryArc& arc : {quarter, three_quarters}) {
      const ArcEventOutcome o = analysis.x_statistic(arc);
      if (!o.identity_holds()) identity += 1;
      if (trace_interface_beta(lattice, coloring, arc).event_a != o.event_a) tracer += 1;
    }
    if (analysis.event_a(quarter) && !analysis.event_a(three_quarters)) monotone += 1;
    const double xa = analysis.x_statistic(quarter).x_stat;
    const double xb = analysis.x_statistic(rest).x_stat;
    if (xa + xb != 1.0) x_complement += 1;
    if (analysis.event_a(quarter) == detect_event_a(lattice, coloring.swapped(), rest)) swap += 1;
  }
  ctx.add("percolation", "identity-violations", identity, 0.0);
  ctx.add("percolation", "arc-monotonicity-violations", monotone, 0.0);
  ctx.add("percolation", "tracer-disagreements", tracer, 0.0);
  ctx.add("percolation", "x-complement-violations", x_complement, 0.0);
  ctx.add("percolation", "color-swap-duality-violations", swap, 0.0);

  // Single-site flips to black never destroy the event.
  const DiskLattice small(0.2);
  const BoundaryArc arc{0.0, 2.0};
  double flips = 0;
  for (std::uint64_t i = 0; i < 40; ++i) {
    Coloring coloring = sample_coloring(small, ctx.options.seed + 1, i);
    const bool before = detect_event_a(small, coloring, arc);
    if (!before) continue;
    for (SiteId s : small.in_disk_sites()) {
      if (coloring.black[s]) continue;
      coloring.black[s] = 1;
      if (!detect_event_a(small, coloring, arc)) flips += 1;
      coloring.black[s] = 0;
    }
  }
  ctx.add("percolation", "black-monotonicity-violations", flips, 0.0);
}

// Smallest usable lattice with at most 20 sites meeting the disk.
percolation::DiskLattice micro_lattice() {
  for (int i = 0; i < 200; ++i) {
    const double delta = 0.6 + 0.005 * i;
    try {
      percolation::DiskLattice lattice(delta);
      if (lattice.in_disk_count() <= 20 && lattice.in_disk_count() >= 7) return lattice;
    } catch (const DomainError&) {
    }
  }
  throw std::logic_error("no generic micro lattice found");
}

void suite_exhaustive(Context& ctx) {
  using namespace percolation;
  const DiskLattice lattice = micro_lattice();
  const BoundaryArc arc{0.0, 2.0};
  const double exact = exact_event_probability(lattice, arc);
  const std::uint64_t total = std::uint64_t{1} << lattice.in_disk_count();
  const mc::McEstimate est = mc::run_bernoulli_estimator(
      [&](std::uint64_t i, mc::CounterRng&) {
        return detect_event_a(lattice, enumerated_coloring(lattice, i), arc) ? mc::Outcome::one
                                                                              : mc::Outcome::zero;
      },
      total, ctx.options.seed, mc::ValueKind::indicator, ctx.options.workers);
  ctx.add("exhaustive", "enumeration-vs-estimator", std::abs(est.p_hat - exact), 1e-12);
  std::uint64_t traced = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (trace_interface_beta(lattice, enumerated_coloring(lattice, i), arc).event_a) ++traced;
  }
  ctx.add("exhaustive", "enumeration-vs-tracer",
          std::abs(static_cast<double>(traced) / static_cast<double>(total) - exact), 1e-12);
}

using Suite = void (*)(Context&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"specialcases", suite_specialcases}, {"ode", suite_ode},
      {"linkage", suite_linkage},           {"symmetry", suite_symmetry},
      {"percolation", suite_percolation},   {"exhaustive", suite_exhaustive},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.first);
    return v;
  }();
  return names;
}

const std::vector<std::string>& fault_names() {
  static const std::vector<std::string> names = {"f-sign"};
  return names;
}

std::vector<Check> run(const Options& options) {
  LeftPassage lp = [](double kappa, HalfPlanePoint p) { return formulas::left_passage_probability(kappa, p); };
  if (options.fault == "f-sign") {
    lp = lp_even_f;
  } else if (!options.fault.empty()) {
    throw DomainError("unknown fault '" + options.fault + "' (known: f-sign)");
  }
  bool known = options.suite == "all";
  for (const auto& s : suites()) known = known || s.first == options.suite;
  if (!known) throw DomainError("unknown suite '" + options.suite + "'");

  std::vector<Check> out;
  Context ctx{options, lp, out};
  for (const auto& [name, fn] : suites()) {
    if (options.suite == "all" || options.suite == name) fn(ctx);
  }
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void print_report(std::ostream& out, const std::vector<Check>& checks) {
  std::size_t failed = 0;
  for (const Check& c : checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %s/%s  measured=%.3e  bound=%.3e\n", c.pass ? "PASS" : "FAIL",
                  c.suite.c_str(), c.name.c_str(), c.measured, c.bound);
    out << line;
    if (!c.pass) ++failed;
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
}

}  // namespace arcperc::verify
