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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "arcperc/error.hpp"
#include "arcperc/montecarlo.hpp"
#include "arcperc/rng.hpp"

using namespace arcperc::mc;

TEST_CASE("philox4x32-10 known-answer vectors") {
  // Random123 kat_vectors.
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  CounterRng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  bool differs_c = false, differs_d = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next_u32();
    CHECK(x == b.next_u32());
    differs_c = differs_c || x != c.next_u32();
    differs_d = differs_d || x != d.next_u32();
  }
  CHECK(differs_c);
  CHECK(differs_d);
}

TEST_CASE("uniform lies in the open unit interval") {
  CounterRng r(1, 1);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  CHECK(std::abs(sum / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("normal draws have standard normal moments and tails") {
  CounterRng r(2024, 0);
  const int n = 4000000;
  double m1 = 0, m2 = 0, m3 = 0, m4 = 0;
  int beyond2 = 0, beyond35 = 0;
  std::vector<double> sample;
  sample.reserve(20000);
  for (int i = 0; i < n; ++i) {
    const double z = r.normal();
    m1 += z;
    m2 += z * z;
    m3 += z * z * z;
    m4 += z * z * z * z;
    beyond2 += std::abs(z) > 2.0;
    beyond35 += std::abs(z) > 3.5;
    if (i < 20000) sample.push_back(z);
  }
  m1 /= n;
  m2 /= n;
  m3 /= n;
  m4 /= n;
  CHECK(std::abs(m1) < 5.0 / std::sqrt(n));
  CHECK(std::abs(m2 - 1.0) < 5.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(m3) < 5.0 * std::sqrt(15.0 / n));
  CHECK(std::abs(m4 - 3.0) < 5.0 * std::sqrt(96.0 / n));
  // P(|Z| > 2) = erfc(sqrt 2), P(|Z| > 3.5) = erfc(3.5 / sqrt 2).
  const double p2 = std::erfc(2.0 / std::sqrt(2.0)), p35 = std::erfc(3.5 / std::sqrt(2.0));
  CHECK(std::abs(beyond2 - n * p2) < 5.0 * std::sqrt(n * p2));
  CHECK(std::abs(beyond35 - n * p35) < 5.0 * std::sqrt(n * p35));
  // Kolmogorov-Smirnov against the normal CDF, 1% critical value.
  std::sort(sample.begin(), sample.end());
  double ks = 0.0;
  const double m = static_cast<double>(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double cdf = 0.5 * std::erfc(-sample[i] / std::sqrt(2.0));
    ks = std::max({ks, std::abs(cdf - i / m), std::abs(cdf - (i + 1) / m)});
  }
  CHECK(ks < 1.63 / std::sqrt(m));
}

TEST_CASE("antithetic noise is the exact negation") {
  NormalStream plain(5, 9), mirror(5, 9, true);
  for (int i = 0; i < 1000; ++i) CHECK(plain.normal() == -mirror.normal());
}

TEST_CASE("estimator examples") {
  const auto ones = run_bernoulli_estimator([](std::uint64_t, CounterRng&) { return Outcome::one; }, 100, 3);
  CHECK(ones.p_hat == 1.0);
  CHECK(ones.ci_high == 1.0);
  CHECK(ones.n == 100);
  CHECK(ones.seed == 3);

  const auto coin = run_bernoulli_estimator(
      [](std::uint64_t, CounterRng& rng) { return (rng.next_u32() & 1u) ? Outcome::one : Outcome::zero; }, 1000000,
      11);
  CHECK(std::abs(coin.p_hat - 0.5) <= 0.0015);
  CHECK(coin.ci_low <= coin.p_hat);
  CHECK(coin.p_hat <= coin.ci_high);
  CHECK(coin.std_err == doctest::Approx(std::sqrt(coin.p_hat * (1 - coin.p_hat) / 1e6)));

  const auto halves = run_bernoulli_estimator([](std::uint64_t, CounterRng&) { return Outcome::half; }, 500, 0,
                                              ValueKind::three_valued);
  CHECK(halves.p_hat == 0.5);
  CHECK(halves.std_err < 1e-12);

  CHECK_THROWS_AS(run_bernoulli_estimator([](std::uint64_t, CounterRng&) { return Outcome::one; }, 99, 0),
                  arcperc::DomainError);
}

TEST_CASE("rejected samples are counted and excluded") {
  const auto e = run_bernoulli_estimator(
      [](std::uint64_t i, CounterRng&) { return i % 10 == 0 ? Outcome::rejected : Outcome::one; }, 1000, 0);
  CHECK(e.rejected == 100);
  CHECK(e.n == 900);
  CHECK(e.p_hat == 1.0);
}

TEST_CASE("wilson interval") {
  // Direct evaluation of the score interval for p = 0.3, n = 50.
  const double p = 0.3, n = 50, z = 1.959963984540054;
  const double c = (p + z * z / (2 * n)) / (1 + z * z / n);
  const double h = z / (1 + z * z / n) * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
  const Interval iv = wilson_interval(p, 50);
  CHECK(iv.low == doctest::Approx(c - h).epsilon(1e-14));
  CHECK(iv.high == doctest::Approx(c + h).epsilon(1e-14));
  CHECK(wilson_interval(0.0, 10).low == 0.0);
  CHECK(wilson_interval(1.0, 10).high == doctest::Approx(1.0));
}

TEST_CASE("estimates do not depend on the worker count") {
  auto trial = [](std::uint64_t, CounterRng& rng) {
    const double u = rng.uniform();
    return u < 0.3 ? Outcome::one : (u < 0.5 ? Outcome::half : Outcome::zero);
  };
  const auto one = run_bernoulli_estimator(trial, 12345, 77, ValueKind::three_valued, 1);
  for (unsigned w : {2u, 3u, 7u, 16u}) {
    CHECK(run_bernoulli_estimator(trial, 12345, 77, ValueKind::three_valued, w) == one);
  }
  CHECK(run_bernoulli_estimator(trial, 12345, 77, ValueKind::three_valued, 1) == one);
  CHECK(!(run_bernoulli_estimator(trial, 12345, 78, ValueKind::three_valued, 1) == one));
}

TEST_CASE("dynamic-channel tally matches per-channel runs") {
  auto fill = [](std::uint64_t i, std::span<Outcome> out) {
    CounterRng rng(4, i);
    for (auto& o : out) o = rng.uniform() < 0.4 ? Outcome::one : Outcome::zero;
  };
  const auto a = parallel_tally_dynamic(5000, 1, 3, fill);
  const auto b = parallel_tally_dynamic(5000, 4, 3, fill);
  for (int k = 0; k < 3; ++k) {
    CHECK(a[k].ones == b[k].ones);
    CHECK(a[k].zeros == b[k].zeros);
    CHECK(a[k].accepted() == 5000);
  }
}

TEST_CASE("confidence intervals cover the true value") {
  const double p = 0.3;
  int covered = 0;
  for (std::uint64_t rep = 0; rep < 200; ++rep) {
    const auto e = run_bernoulli_estimator(
        [p](std::uint64_t, CounterRng& rng) { return rng.uniform() < p ? Outcome::one : Outcome::zero; }, 400,
        1000 + rep);
    covered += e.ci_low <= p && p <= e.ci_high;
  }
  CHECK(covered >= 180);
}

TEST_CASE("worker count from the environment") {
  setenv("ARCPERC_WORKERS", "5", 1);
  CHECK(default_workers() == 5);
  setenv("ARCPERC_WORKERS", "junk", 1);
  CHECK(default_workers() >= 1);
  unsetenv("ARCPERC_WORKERS");
  CHECK(default_workers() >= 1);
}
