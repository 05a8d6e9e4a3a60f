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

#include "arcperc/diffusion.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "arcperc/error.hpp"
#include "arcperc/specialfn.hpp"

namespace arcperc::diffusion {
namespace {

constexpr double kRescaleBelow = 0x1.0p-600;
constexpr double kRescaleBy = 0x1.0p+600;

mc::Outcome to_outcome(const PathOutcome& out) {
  if (out.truncated) return mc::Outcome::rejected;
  return out.exit == Exit::upper ? mc::Outcome::one : mc::Outcome::zero;
}

void check_budget(const mc::McEstimate& est, std::uint64_t n_paths, const char* who) {
  if (est.rejected * 100 > n_paths) {
    std::ostringstream msg;
    msg << who << ": " << est.rejected << " of " << n_paths
        << " paths truncated (budget 1%); raise max_steps or lower escape";
    throw BudgetExceeded(msg.str());
  }
}

}  // namespace

void SdeParams::validate() const {
  std::ostringstream msg;
  if (!(kappa > 0.0 && kappa <= 8.0)) msg << "kappa must lie in (0, 8] (got " << kappa << ")";
  else if (!(step > 0.0)) msg << "step must be positive (got " << step << ")";
  else if (!(escape >= 10.0) || !std::isfinite(escape)) msg << "escape must be >= 10 (got " << escape << ")";
  else if (max_steps == 0) msg << "max_steps must be positive";
  else return;
  throw DomainError(msg.str());
}

const char* to_string(Method m) { return m == Method::w_diffusion ? "w_diffusion" : "loewner"; }

Method parse_method(const char* text) {
  if (std::strcmp(text, "w_diffusion") == 0) return Method::w_diffusion;
  if (std::strcmp(text, "loewner") == 0) return Method::loewner;
  throw DomainError(std::string("unknown method '") + text + "' (expected w_diffusion or loewner)");
}

PathOutcome simulate_w_path(const SdeParams& params, double w0, mc::NormalStream& noise) {
  if (!std::isfinite(w0)) throw DomainError("simulate_w_path: w0 must be finite");
  const double h = params.step;
  const double noise_scale = std::sqrt(params.kappa * h);
  double w = w0;
  for (std::uint64_t n = 0; n < params.max_steps; ++n) {
    if (std::abs(w) >= params.escape) return {w > 0.0 ? Exit::upper : Exit::lower, n, false};
    // du = h (1 + w^2): drift 4w/(1+w^2) du = 4 w h, noise sd sqrt(kappa du).
    w = w + 4.0 * w * h - noise_scale * std::sqrt(1.0 + w * w) * noise.normal();
  }
  return {w > 0.0 ? Exit::upper : Exit::lower, params.max_steps, true};
}

PathOutcome simulate_w_window(const SdeParams& params, const formulas::HittingWindow& win,
                              mc::NormalStream& noise) {
  if (!(win.a < win.w_hat && win.w_hat < win.b)) {
    throw DomainError("simulate_w_window: need a < w_hat < b");
  }
  const double du = params.step;
  const double variance = params.kappa * du;
  const double sd = std::sqrt(variance);
  double w = win.w_hat;
  for (std::uint64_t n = 0; n < params.max_steps; ++n) {
    const double next = w + 4.0 * w / (w * w + 1.0) * du - sd * noise.normal();
    if (next >= win.b) return {Exit::upper, n + 1, false};
    if (next <= win.a) return {Exit::lower, n + 1, false};
    const double p_upper = std::exp(-2.0 * (win.b - w) * (win.b - next) / variance);
    const double p_lower = std::exp(-2.0 * (w - win.a) * (next - win.a) / variance);
    const double u = noise.uniform();
    if (u < p_upper) return {Exit::upper, n + 1, false};
    if (u < p_upper + p_lower) return {Exit::lower, n + 1, false};
    w = next;
  }
  return {Exit::upper, params.max_steps, true};
}

PathOutcome simulate_loewner_point(const SdeParams& params, formulas::HalfPlanePoint p,
                                   mc::NormalStream& noise) {
  if (!(p.y0 > 0.0)) throw DomainError("simulate_loewner_point: y0 must be positive");
  const double h = params.step;
  const double noise_scale = std::sqrt(params.kappa * h);
  double x = p.x0;
  double y = p.y0;
  for (std::uint64_t n = 0; n < params.max_steps; ++n) {
    if (std::abs(x) >= params.escape * y) return {x > 0.0 ? Exit::upper : Exit::lower, n, false};
    const double r = std::sqrt(x * x + y * y);
    // dt = h r^2: 2x dt / r^2 = 2 x h, sd(dW) = sqrt(kappa dt) = sqrt(kappa h) r.
    x = x + 2.0 * x * h - noise_scale * r * noise.normal();
    y = y - 2.0 * y * h;
    if (y < kRescaleBelow) {
      // The update is homogeneous of degree one in (x, y); scaling by a
      // power of two leaves every later decision bit-identical.
      x *= kRescaleBy;
      y *= kRescaleBy;
    }
  }
  return {x > 0.0 ? Exit::upper : Exit::lower, params.max_steps, true};
}

mc::McEstimate estimate_hitting_probability(const SdeParams& params, const formulas::HittingWindow& win,
                                            std::uint64_t n_paths, std::uint64_t seed, unsigned workers) {
  params.validate();
  if (!(win.a < win.w_hat && win.w_hat < win.b)) {
    throw DomainError("estimate_hitting_probability: need a < w_hat < b");
  }
  const auto est = mc::run_bernoulli_estimator(
      [&](std::uint64_t, mc::CounterRng& rng) {
        mc::NormalStream noise(rng.seed(), rng.stream());
        return to_outcome(simulate_w_window(params, win, noise));
      },
      n_paths, seed, mc::ValueKind::indicator, workers);
  check_budget(est, n_paths, "estimate_hitting_probability");
  return est;
}

mc::McEstimate estimate_left_passage_mc(const SdeParams& params, formulas::HalfPlanePoint p,
                                        std::uint64_t n_paths, std::uint64_t seed, Method method,
                                        unsigned workers) {
  params.validate();
  if (!(p.y0 > 0.0)) throw DomainError("estimate_left_passage_mc: y0 must be positive");
  const double w0 = p.x0 / p.y0;
  const auto est = mc::run_bernoulli_estimator(
      [&](std::uint64_t, mc::CounterRng& rng) {
        const std::uint64_t stream = method == Method::loewner ? rng.stream() | kLoewnerStreamBit : rng.stream();
        mc::NormalStream noise(rng.seed(), stream);
        const PathOutcome out = method == Method::w_diffusion ? simulate_w_path(params, w0, noise)
                                                              : simulate_loewner_point(params, p, noise);
        return to_outcome(out);
      },
      n_paths, seed, mc::ValueKind::indicator, workers);
  check_budget(est, n_paths, "estimate_left_passage_mc");
  return est;
}

double escape_bias_bound(double kappa, double escape) {
  if (kappa >= 8.0) return 0.5;
  return specialfn::f_tail(kappa, escape) / (2.0 * specialfn::f_limit(kappa));
}

}  // namespace arcperc::diffusion
