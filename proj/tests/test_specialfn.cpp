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

#include <cmath>
#include <numbers>

#include "arcperc/error.hpp"
#include "arcperc/specialfn.hpp"
#include "oracles.hpp"

using namespace arcperc::specialfn;
using arcperc::DomainError;

namespace {
constexpr double kPi = std::numbers::pi;

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace

TEST_CASE("gamma at classical points") {
  CHECK(arcperc::specialfn::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(close_rel(arcperc::specialfn::gamma(0.5), std::sqrt(kPi), 1e-13));
  CHECK(close_rel(arcperc::specialfn::gamma(5.0), 24.0, 1e-13));
  // 30-digit reference values (mpmath).
  CHECK(close_rel(arcperc::specialfn::gamma(1.0 / 6.0), 5.56631600178023520, 1e-12));
  CHECK(close_rel(arcperc::specialfn::gamma(2.0 / 3.0), 1.35411793942640042, 1e-12));
}

TEST_CASE("gamma agrees with the C library over its working range") {
  for (double x = 0.01; x < 40.0; x *= 1.07) {
    INFO("x = " << x);
    CHECK(close_rel(arcperc::specialfn::gamma(x), std::tgamma(x), 1e-12));
  }
}

TEST_CASE("gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(arcperc::specialfn::gamma(0.0), DomainError);
  CHECK_THROWS_AS(arcperc::specialfn::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(arcperc::specialfn::gamma(std::nan("")), DomainError);
}

TEST_CASE("hyp2f1_half special values") {
  for (double b : {0.6, 2.0 / 3.0, 1.0, 1.5, 3.0}) CHECK(hyp2f1_half(b, 0.0) == 1.0);
  for (double w : {0.1, 1.0, 3.0, 100.0, 1e5}) {
    CHECK(close_rel(hyp2f1_half(1.5, -w * w), 1.0 / std::sqrt(1.0 + w * w), 1e-12));
    CHECK(close_rel(hyp2f1_half(1.0, -w * w), std::atan(w) / w, 1e-12));
  }
  CHECK(close_rel(hyp2f1_half(2.0 / 3.0, -1.0), 0.847138006602980348, 1e-12));
}

TEST_CASE("hyp2f1_half matches the defining series inside the unit disk") {
  for (double b : {0.51, 0.55, 2.0 / 3.0, 0.75, 1.0, 4.0 / 3.0, 2.0, 5.0}) {
    for (double z : {-1e-6, -0.05, -0.3, -0.5, -0.81, -0.95}) {
      INFO("b = " << b << ", z = " << z);
      CHECK(close_rel(hyp2f1_half(b, z), static_cast<double>(oracle::hyp2f1_series(b, z)), 1e-10));
    }
  }
}

TEST_CASE("hyp2f1_half matches quadrature for large arguments") {
  for (double kappa : {1.0, 2.0, 3.0, 4.0, 6.0, 7.5}) {
    for (double w : {1.5, 10.0, 1e3, 1e6, 1e9}) {
      INFO("kappa = " << kappa << ", w = " << w);
      const double expected = static_cast<double>(oracle::f_quadrature(kappa, w)) / w;
      CHECK(close_rel(hyp2f1_half(4.0 / kappa, -w * w), expected, 1e-10));
    }
  }
  // mpmath reference values.
  CHECK(close_rel(hyp2f1_half(0.75, -1e12), 2.62005755429212011e-6, 1e-10));
  CHECK(close_rel(hyp2f1_half(2.0, -0.81), 0.683362594915155583, 1e-12));
  CHECK(close_rel(hyp2f1_half(0.55, -1e6), 0.00566485246123056791, 1e-10));
}

TEST_CASE("hyp2f1_half domain") {
  CHECK_THROWS_AS(hyp2f1_half(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(hyp2f1_half(0.3, -1.0), DomainError);
  CHECK_THROWS_AS(hyp2f1_half(1.0, 0.1), DomainError);
}

TEST_CASE("schramm_f examples") {
  CHECK(schramm_f(6.0, 0.0) == 0.0);
  CHECK(close_rel(schramm_f(8.0 / 3.0, 1.0), 1.0 / std::sqrt(2.0), 1e-13));
  CHECK(close_rel(schramm_f(4.0, 1.0), kPi / 4.0, 1e-13));
  CHECK_THROWS_AS(schramm_f(8.0, 1.0), DomainError);
  CHECK_THROWS_AS(schramm_f(0.0, 1.0), DomainError);
}

TEST_CASE("schramm_f is odd, increasing and bounded") {
  for (double kappa : {0.5, 2.0, 8.0 / 3.0, 4.0, 6.0, 7.5, 7.99}) {
    const double limit = f_limit(kappa);
    double previous = -limit;
    for (int i = -400; i <= 400; ++i) {
      const double w = std::sinh(i / 20.0);
      const double f = schramm_f(kappa, w);
      CHECK(std::abs(f + schramm_f(kappa, -w)) <= 1e-14);
      // Near the limit f rounds onto it; the tail carries the strict part.
      CHECK(f >= previous);
      CHECK(std::abs(f) <= limit);
      CHECK(f_tail(kappa, std::abs(w)) > 0.0);
      previous = f;
    }
  }
}

TEST_CASE("schramm_f approaches f_limit monotonically") {
  for (double kappa : {2.0, 3.0, 6.0, 7.5}) {
    const double b = 4.0 / kappa;
    double gap = 1e300;
    for (double w = 10.0; w <= 1e6; w *= 10.0) {
      const double tail = f_tail(kappa, w);
      CHECK(tail > 0.0);
      CHECK(tail < gap);
      const double expected = static_cast<double>(oracle::tail_part(b, 0.0L, std::pow(1.0L / w, 2 * b - 1)));
      CHECK(close_rel(tail, expected, 1e-10));
      // The difference form loses everything below rounding of f_limit.
      CHECK(std::abs(f_limit(kappa) - schramm_f(kappa, w) - tail) <= 4e-16 * f_limit(kappa));
      gap = tail;
    }
  }
}

TEST_CASE("f_limit values") {
  CHECK(close_rel(f_limit(8.0 / 3.0), 1.0, 1e-13));
  CHECK(close_rel(f_limit(4.0), kPi / 2.0, 1e-13));
  CHECK(close_rel(f_limit(2.0), kPi / 4.0, 1e-13));
  CHECK(close_rel(f_limit(3.0), 1.12025130033328022, 1e-12));
  CHECK(close_rel(f_limit(6.0), 3.64297597183137242, 1e-12));
  CHECK(close_rel(f_limit(7.5), 15.6820526563856490, 1e-12));
  for (double kappa : {1.0, 2.5, 5.0, 7.0}) {
    CHECK(close_rel(f_limit(kappa), static_cast<double>(oracle::f_limit_quadrature(kappa)), 1e-11));
  }
  CHECK_THROWS_AS(f_limit(8.0), DomainError);
}

TEST_CASE("f_tail is the complement of f") {
  for (double kappa : {2.0, 6.0}) {
    for (double w : {0.0, 0.5, 2.0, 50.0}) {
      CHECK(std::abs(f_tail(kappa, w) + schramm_f(kappa, w) - f_limit(kappa)) <= 1e-13 * f_limit(kappa));
    }
  }
}
