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

#include "arcperc/rng.hpp"

#include <cmath>

namespace arcperc::mc {
namespace detail {
namespace {

constexpr double kR = 3.442619855899;          // start of the tail
constexpr double kV = 9.91256303526217e-3;     // area of each layer
double density(double x) { return std::exp(-0.5 * x * x); }

std::array<double, 129> make_x() {
  std::array<double, 129> x{};
  x[0] = kV / density(kR);
  x[1] = kR;
  for (int i = 2; i < 128; ++i) x[i] = std::sqrt(-2.0 * std::log(kV / x[i - 1] + density(x[i - 1])));
  x[128] = 0.0;
  return x;
}

}  // namespace

const std::array<double, 129> kZigX = make_x();
const std::array<double, 128> kZigRatio = [] {
  std::array<double, 128> r{};
  for (int i = 0; i < 128; ++i) r[i] = kZigX[i + 1] / kZigX[i];
  return r;
}();

}  // namespace detail

double CounterRng::normal_slow(unsigned layer, double u) {
  using detail::kZigX;
  using detail::kZigRatio;
  for (;;) {
    if (layer == 0) {
      // Tail beyond R (Marsaglia 1964).
      double x, y;
      do {
        x = std::log(uniform()) / detail::kR;
        y = std::log(uniform());
      } while (-2.0 * y < x * x);
      return u < 0.0 ? x - detail::kR : detail::kR - x;
    }
    const double x = u * kZigX[layer];
    const double f0 = std::exp(-0.5 * (kZigX[layer] * kZigX[layer] - x * x));
    const double f1 = std::exp(-0.5 * (kZigX[layer + 1] * kZigX[layer + 1] - x * x));
    if (f1 + uniform() * (f0 - f1) < 1.0) return x;

    const std::uint32_t bits = next_u32();
    layer = bits & 127u;
    u = (static_cast<double>(bits >> 7) + 0.5) * 0x1.0p-24 - 1.0;
    if (u < kZigRatio[layer] && u > -kZigRatio[layer]) return u * kZigX[layer];
  }
}

}  // namespace arcperc::mc
