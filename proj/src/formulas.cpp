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

#include "arcperc/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "arcperc/error.hpp"
#include "arcperc/specialfn.hpp"

namespace arcperc::formulas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kThetaGuard = 1e-8;

void require_point(HalfPlanePoint p) {
  if (!(p.y0 > 0.0) || !std::isfinite(p.x0) || !std::isfinite(p.y0)) {
    std::ostringstream msg;
    msg << "z0 must lie in the open upper half plane (got x0=" << p.x0 << ", y0=" << p.y0 << ")";
    throw DomainError(msg.str());
  }
}

void require_theta(ArcAngle arc) {
  if (!(arc.theta > 0.0 && arc.theta < kTwoPi)) {
    std::ostringstream msg;
    msg << "theta must lie in (0, 2 pi) (got " << arc.theta << ")";
    throw DomainError(msg.str());
  }
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

double cot_half(double theta) { return std::cos(0.5 * theta) / std::sin(0.5 * theta); }

bool is_kappa(double kappa, double target) { return std::abs(kappa - target) <= 1e-12 * target; }

}  // namespace

double arg(HalfPlanePoint p) { return std::atan2(p.y0, p.x0); }

double left_passage_probability(double kappa, HalfPlanePoint p) {
  require_point(p);
  if (!(kappa > 0.0 && kappa <= 8.0)) {
    std::ostringstream msg;
    msg << "left_passage_probability: kappa must lie in (0, 8] (got " << kappa << ")";
    throw DomainError(msg.str());
  }
  if (kappa == 8.0) return 0.5;
  const double w = p.x0 / p.y0;
  return clamp01(0.5 + specialfn::schramm_f(kappa, w) / (2.0 * specialfn::f_limit(kappa)));
}

double left_passage_closed_form(double kappa, HalfPlanePoint p) {
  require_point(p);
  const double modulus = std::hypot(p.x0, p.y0);
  if (is_kappa(kappa, 2.0)) {
    return 1.0 + p.x0 * p.y0 / (kPi * modulus * modulus) - arg(p) / kPi;
  }
  if (is_kappa(kappa, 8.0 / 3.0)) {
    // The general formula gives the factor 1/2 in front of x0/|z0|.
    return 0.5 + p.x0 / (2.0 * modulus);
  }
  if (is_kappa(kappa, 4.0)) return 1.0 - arg(p) / kPi;
  if (is_kappa(kappa, 8.0)) return 0.5;
  std::ostringstream msg;
  msg << "left_passage_closed_form: kappa must be one of 2, 8/3, 4, 8 (got " << kappa << ")";
  throw DomainError(msg.str());
}

double arc_event_probability(ArcAngle arc) {
  require_theta(arc);
  const double theta = std::clamp(arc.theta, kThetaGuard, kTwoPi - kThetaGuard);
  const double c = cot_half(theta);
  const double constant =
      specialfn::gamma(2.0 / 3.0) / (std::sqrt(kPi) * specialfn::gamma(1.0 / 6.0));
  return clamp01(0.5 - constant * specialfn::hyp2f1_half(2.0 / 3.0, -c * c) * c);
}

double hitting_probability(double kappa, HittingWindow win) {
  if (!(win.a < win.w_hat && win.w_hat < win.b)) {
    std::ostringstream msg;
    msg << "hitting_probability: need a < w_hat < b (got a=" << win.a << ", w_hat=" << win.w_hat
        << ", b=" << win.b << ")";
    throw DomainError(msg.str());
  }
  const double fa = specialfn::schramm_f(kappa, win.a);
  const double fb = specialfn::schramm_f(kappa, win.b);
  const double fw = specialfn::schramm_f(kappa, win.w_hat);
  return clamp01((fw - fa) / (fb - fa));
}

std::complex<double> conformal_map_phi(ArcAngle arc, std::complex<double> z) {
  require_theta(arc);
  if (z.imag() < 0.0) throw DomainError("conformal_map_phi: z must lie in the closed upper half plane");
  using namespace std::complex_literals;
  const double c = cot_half(arc.theta);
  return std::polar(1.0, arc.theta) * (z + c - 1i) / (z + c + 1i);
}

HalfPlanePoint theta_to_halfplane_point(ArcAngle arc) {
  require_theta(arc);
  return {-cot_half(arc.theta), 1.0};
}

}  // namespace arcperc::formulas
