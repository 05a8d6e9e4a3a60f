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

#include "arcperc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "arcperc/error.hpp"

namespace arcperc::mc {

void Tally::add(Outcome o) {
  switch (o) {
    case Outcome::zero: ++zeros; break;
    case Outcome::half: ++halves; break;
    case Outcome::one: ++ones; break;
    case Outcome::rejected: ++rejected; break;
  }
}

Tally& Tally::operator+=(const Tally& other) {
  zeros += other.zeros;
  halves += other.halves;
  ones += other.ones;
  rejected += other.rejected;
  return *this;
}

Interval wilson_interval(double p_hat, std::uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p_hat + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

McEstimate summarize(const Tally& tally, std::uint64_t seed, ValueKind kind) {
  McEstimate est;
  est.seed = seed;
  est.rejected = tally.rejected;
  est.n = tally.accepted();
  if (est.n == 0) {
    est.ci_high = 1.0;
    return est;
  }
  const double n = static_cast<double>(est.n);
  const double sum = static_cast<double>(tally.ones) + 0.5 * static_cast<double>(tally.halves);
  est.p_hat = sum / n;
  if (kind == ValueKind::indicator) {
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / n);
    const Interval ci = wilson_interval(est.p_hat, est.n);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
  } else {
    const double sum_sq = static_cast<double>(tally.ones) + 0.25 * static_cast<double>(tally.halves);
    const double var = est.n > 1 ? std::max(0.0, (sum_sq - n * est.p_hat * est.p_hat) / (n - 1.0)) : 0.0;
    est.std_err = std::sqrt(var / n);
    est.ci_low = std::max(0.0, est.p_hat - kZ95 * est.std_err);
    est.ci_high = std::min(1.0, est.p_hat + kZ95 * est.std_err);
  }
  est.ci_low = std::min(est.ci_low, est.p_hat);
  est.ci_high = std::max(est.ci_high, est.p_hat);
  return est;
}

unsigned default_workers() {
  if (const char* env = std::getenv("ARCPERC_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

McEstimate run_bernoulli_estimator(const Trial& trial, std::uint64_t n, std::uint64_t seed,
                                   ValueKind kind, unsigned workers) {
  if (n < 100) throw DomainError("run_bernoulli_estimator: need at least 100 samples");
  const auto tally = parallel_tally<1>(n, workers, [&](std::uint64_t i) {
    CounterRng rng(seed, i);
    return std::array<Outcome, 1>{trial(i, rng)};
  });
  return summarize(tally[0], seed, kind);
}

}  // namespace arcperc::mc
