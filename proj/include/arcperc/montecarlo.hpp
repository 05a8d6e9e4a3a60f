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

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "arcperc/rng.hpp"

namespace arcperc::mc {

/// Estimate of a probability (or of the mean of a {0, 1/2, 1}-valued statistic).
struct McEstimate {
  double p_hat = 0.0;
  std::uint64_t n = 0;  ///< accepted samples
  double std_err = 0.0;
  double ci_low = 0.0;   ///< 95%
  double ci_high = 0.0;  ///< 95%
  std::uint64_t seed = 0;
  std::uint64_t rejected = 0;  ///< truncated paths or resampled configurations

  bool operator==(const McEstimate&) const = default;
};

/// Value of one trial.
enum class Outcome : std::uint8_t { zero, half, one, rejected };

/// Integer counts only, so any reduction order gives the same totals.
struct Tally {
  std::uint64_t zeros = 0;
  std::uint64_t halves = 0;
  std::uint64_t ones = 0;
  std::uint64_t rejected = 0;

  void add(Outcome o);
  Tally& operator+=(const Tally& other);
  std::uint64_t accepted() const { return zeros + halves + ones; }
};

enum class ValueKind {
  indicator,    ///< {0, 1}; Wilson score interval
  three_valued  ///< {0, 1/2, 1}; mean +- z * empirical sd / sqrt(n)
};

inline constexpr double kZ95 = 1.959963984540054;

struct Interval {
  double low;
  double high;
};

Interval wilson_interval(double p_hat, std::uint64_t n, double z = kZ95);

McEstimate summarize(const Tally& tally, std::uint64_t seed, ValueKind kind);

/// Worker count from the ARCPERC_WORKERS environment variable, else the
/// hardware concurrency (at least 1).
unsigned default_workers();

/// Runs fn(i) for i in [0, n) on `workers` threads. fn returns one Outcome per
/// channel; chunks are contiguous and tallies are summed, so the result does
/// not depend on the worker count.
template <std::size_t K, class Fn>
std::array<Tally, K> parallel_tally(std::uint64_t n, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = 1;
  if (workers > n) workers = static_cast<unsigned>(n > 0 ? n : 1);
  std::vector<std::array<Tally, K>> partial(workers);
  auto run_chunk = [&](unsigned w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::array<Outcome, K> out = fn(i);
      for (std::size_t k = 0; k < K; ++k) partial[w][k].add(out[k]);
    }
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }
  std::array<Tally, K> total{};
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < K; ++k) total[k] += part[k];
  }
  return total;
}

/// Same as parallel_tally with a channel count chosen at run time;
/// fn(i, out) fills out[0 .. channels).
template <class Fn>
std::vector<Tally> parallel_tally_dynamic(std::uint64_t n, unsigned workers, std::size_t channels, Fn&& fn) {
  if (workers == 0) workers = 1;
  if (workers > n) workers = static_cast<unsigned>(n > 0 ? n : 1);
  std::vector<std::vector<Tally>> partial(workers, std::vector<Tally>(channels));
  auto run_chunk = [&](unsigned w) {
    std::vector<Outcome> out(channels, Outcome::rejected);
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) {
      fn(i, std::span<Outcome>(out));
      for (std::size_t k = 0; k < channels; ++k) partial[w][k].add(out[k]);
    }
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }
  std::vector<Tally> total(channels);
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < channels; ++k) total[k] += part[k];
  }
  return total;
}

using Trial = std::function<Outcome(std::uint64_t index, CounterRng& rng)>;

/// Mean of `trial` over n samples; sample i draws from stream (seed, i).
/// Requires n >= 100.
McEstimate run_bernoulli_estimator(const Trial& trial, std::uint64_t n, std::uint64_t seed,
                                   ValueKind kind = ValueKind::indicator, unsigned workers = 1);

}  // namespace arcperc::mc
