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

#include "arcperc/specialfn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "arcperc/error.hpp"

namespace arcperc::specialfn {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxTerms = 100000;
constexpr double kSeriesTol = 1e-17;

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  // Valid for x >= 0.5.
  const double xm1 = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (xm1 + static_cast<double>(i));
  }
  const double t = xm1 + kLanczosG + 0.5;
  // t^(x - 1/2) split in two halves so that x up to 170 does not overflow.
  const double half_pow = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * kPi) * half_pow * (half_pow * std::exp(-t)) * acc;
}

void require_b(double b) {
  if (!(b > 0.5) || !std::isfinite(b)) {
    std::ostringstream msg;
    msg << "hyp2f1_half: second parameter b must satisfy b > 1/2 (got " << b << ")";
    throw DomainError(msg.str());
  }
}

double kappa_to_b(const char* who, double kappa) {
  if (!(kappa > 0.0 && kappa < 8.0)) {
    std::ostringstream msg;
    msg << who << ": kappa must lie in (0, 8) (got " << kappa << ")";
    throw DomainError(msg.str());
  }
  return 4.0 / kappa;
}

// Integral of (1 + t^2)^(-b) over [0, inf).
double full_integral(double b) {
  return 0.5 * std::sqrt(kPi) * gamma(b - 0.5) / gamma(b);
}

// F(1/2, b; 3/2; z) for z in [-1, 0] after the Pfaff transformation
// F(a, b; c; z) = (1 - z)^(-b) F(c - a, b; c; z / (z - 1)); here the new
// argument lies in [0, 1/2].
double pfaff_series(double b, double z) {
  const double zeta = z / (z - 1.0);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (b + n) / (n + 1.5) * zeta;
    sum += term;
    if (std::abs(term) < kSeriesTol * std::abs(sum)) break;
  }
  return std::exp(-b * std::log1p(-z)) * sum;
}

// Integral of (1 + t^2)^(-b) over [w, inf) for w >= 1. The substitution
// u = 1 / (1 + t^2) turns it into B(x; b - 1/2, 1/2) / 2 with x = 1/(1 + w^2).
double tail_series(double b, double w) {
  const double p = b - 0.5;
  double log_x;
  double x;
  if (w > 1e150) {
    log_x = -2.0 * std::log(w);
    x = 0.0;
  } else {
    x = 1.0 / (1.0 + w * w);
    log_x = -std::log1p(w * w);
  }
  double coeff = 1.0;
  double xn = 1.0;
  double sum = 1.0 / p;
  for (int n = 0; n < kMaxTerms; ++n) {
    coeff *= (n + 0.5) / (n + 1.0);
    xn *= x;
    const double term = coeff * xn / (p + n + 1.0);
    sum += term;
    if (term < kSeriesTol * sum) break;
  }
  return 0.5 * std::exp(p * log_x) * sum;
}

// Integral of (1 + t^2)^(-b) over [0, w] for w >= 0.
double partial_integral(double b, double w) {
  if (w <= 1.0) return w * pfaff_series(b, -w * w);
  return full_integral(b) - tail_series(b, w);
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "gamma: argument must be positive (got " << x << ")";
    throw DomainError(msg.str());
  }
  if (x > 170.0) throw DomainError("gamma: argument above 170 overflows double");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  return lanczos_gamma(x);
}

double hyp2f1_half(double b, double z) {
  require_b(b);
  if (!(z <= 0.0)) {
    std::ostringstream msg;
    msg << "hyp2f1_half: argument must satisfy z <= 0 (got " << z << ")";
    throw DomainError(msg.str());
  }
  if (z == 0.0) return 1.0;
  if (z >= -1.0) return pfaff_series(b, z);
  if (std::isinf(z)) return 0.0;
  const double w = std::sqrt(-z);
  return (full_integral(b) - tail_series(b, w)) / w;
}

double schramm_f(double kappa, double w) {
  const double b = kappa_to_b("schramm_f", kappa);
  if (std::isnan(w)) throw DomainError("schramm_f: w is NaN");
  const double magnitude = std::isinf(w) ? full_integral(b) : partial_integral(b, std::abs(w));
  return std::signbit(w) ? -magnitude : magnitude;
}

double f_limit(double kappa) { return full_integral(kappa_to_b("f_limit", kappa)); }

double f_tail(double kappa, double w) {
  const double b = kappa_to_b("f_tail", kappa);
  if (!(w >= 0.0)) throw DomainError("f_tail: w must be non-negative");
  if (std::isinf(w)) return 0.0;
  if (w > 1.0) return tail_series(b, w);
  return full_integral(b) - partial_integral(b, w);
}

}  // namespace arcperc::specialfn
