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

namespace arcperc::mc {

/// Philox4x32-10 block function (Salmon et al., SC'11).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += 0x9E3779B9u;
      key[1] += 0xBB67AE85u;
    }
    const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

namespace detail {
// Ziggurat tables, 128 layers: layer i spans [0, kZigX[i]) and a draw
// |u| < kZigRatio[i] is accepted without further work.
extern const std::array<double, 129> kZigX;
extern const std::array<double, 128> kZigRatio;
}  // namespace detail

/// Stateless-per-stream generator: stream (seed, index) is a fixed sequence
/// of Philox blocks, independent of which thread consumes it or when.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint32_t next_u32() {
    if (used_ == 4) refill();
    return buffer_[used_++];
  }
  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal, ziggurat method. One 32-bit draw on the fast path:
  /// the low 7 bits pick the layer, the top 25 bits give a signed uniform.
  double normal() {
    const std::uint32_t bits = next_u32();
    const unsigned layer = bits & 127u;
    const double u = (static_cast<double>(bits >> 7) + 0.5) * 0x1.0p-24 - 1.0;
    if (u < detail::kZigRatio[layer] && u > -detail::kZigRatio[layer]) return u * detail::kZigX[layer];
    return normal_slow(layer, u);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  void refill() {
    const PhiloxCounter ctr = {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                               static_cast<std::uint32_t>(stream_),
                               static_cast<std::uint32_t>(stream_ >> 32)};
    const PhiloxKey key = {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
    buffer_ = philox4x32_10(ctr, key);
    ++block_;
    used_ = 0;
  }
  double normal_slow(unsigned layer, double u);

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int used_ = 4;
};

/// Normal increments for the SDE integrators. The antithetic stream returns
/// the exact negation of what the plain stream with the same key returns.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream, bool antithetic = false)
      : rng_(seed, stream), sign_(antithetic ? -1.0 : 1.0) {}

  double normal() { return sign_ * rng_.normal(); }
  double uniform() { return rng_.uniform(); }

 private:
  CounterRng rng_;
  double sign_;
};

}  // namespace arcperc::mc
