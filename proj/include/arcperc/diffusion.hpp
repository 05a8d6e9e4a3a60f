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

// Monte Carlo for the side on which the SLE trace passes a marked point.
//
// Both integrators run Euler-Maruyama in an auxiliary clock s with
// du = (1 + w^2) ds, where u is the clock in which w = x/y solves
//   dw = -dW~ + 4 w du / (w^2 + 1),   d<W~> = kappa du.
// In the s clock the far field |w| >> 1 is crossed in O(log |w|) steps,
// which is what makes a large escape threshold affordable.

#include <cstdint>

#include "arcperc/formulas.hpp"
#include "arcperc/montecarlo.hpp"
#include "arcperc/rng.hpp"

namespace arcperc::diffusion {

struct SdeParams {
  double kappa = 6.0;
  double step = 1e-3;   ///< Euler increment of the integration clock
  double escape = 1e8;  ///< |w| >= escape classifies the path
  std::uint64_t max_steps = 10'000'000;

  void validate() const;
};

/// upper: w -> +inf (trace passes left of z0) or b hit first.
enum class Exit : std::uint8_t { upper, lower };

struct PathOutcome {
  Exit exit = Exit::upper;
  std::uint64_t steps_used = 0;
  bool truncated = false;
};

enum class Method { w_diffusion, loewner };

const char* to_string(Method m);
Method parse_method(const char* text);

/// Integrates w until |w| >= escape (exit = sign of w) or max_steps.
PathOutcome simulate_w_path(const SdeParams& params, double w0, mc::NormalStream& noise);

/// Integrates w in its own clock u with fixed du = step until it leaves
/// (a, b). A Brownian-bridge test after each step catches crossings that
/// happen between grid points.
PathOutcome simulate_w_window(const SdeParams& params, const formulas::HittingWindow& win,
                              mc::NormalStream& noise);

/// Integrates the Loewner pair dx = 2x dt/(x^2+y^2) - dW, dy = -2y dt/(x^2+y^2)
/// with dt = step * (x^2 + y^2) until |x/y| >= escape.
PathOutcome simulate_loewner_point(const SdeParams& params, formulas::HalfPlanePoint p,
                                   mc::NormalStream& noise);

/// Fraction of paths hitting b before a. Throws BudgetExceeded when more
/// than 1% of paths truncate.
mc::McEstimate estimate_hitting_probability(const SdeParams& params, const formulas::HittingWindow& win,
                                            std::uint64_t n_paths, std::uint64_t seed,
                                            unsigned workers = 1);

/// Loewner paths draw from stream (seed, i | kLoewnerStreamBit), so the two
/// methods see unrelated noise.
inline constexpr std::uint64_t kLoewnerStreamBit = std::uint64_t{1} << 63;

/// Fraction of paths passing to the left of z0. Path i uses stream (seed, i).
mc::McEstimate estimate_left_passage_mc(const SdeParams& params, formulas::HalfPlanePoint p,
                                        std::uint64_t n_paths, std::uint64_t seed, Method method,
                                        unsigned workers = 1);

/// Probability that the continuum diffusion, once at |w| = escape, still
/// ends on the opposite side. Bounds the bias of the escape classification.
double escape_bias_bound(double kappa, double escape);

}  // namespace arcperc::diffusion
