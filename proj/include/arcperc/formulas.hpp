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

#include <complex>

namespace arcperc::formulas {

/// A point z0 = x0 + i y0 of the upper half plane.
struct HalfPlanePoint {
  double x0 = 0.0;
  double y0 = 1.0;
};

/// An arc {e^{is} : s in [0, theta]} of the unit circle, 0 < theta < 2 pi.
struct ArcAngle {
  double theta = 0.0;
};

/// Start point and absorbing barriers of the one-dimensional diffusion; a < w_hat < b.
struct HittingWindow {
  double a = -1.0;
  double b = 1.0;
  double w_hat = 0.0;
};

/// Probability that the chordal SLE_kappa trace passes to the left of z0,
/// for 0 < kappa <= 8. kappa == 8 returns exactly 1/2.
double left_passage_probability(double kappa, HalfPlanePoint p);

/// Elementary forms of left_passage_probability at kappa = 2, 8/3, 4, 8.
double left_passage_closed_form(double kappa, HalfPlanePoint p);

/// Limiting probability that some black cluster touching the arc A_theta
/// surrounds the origin together with the arc. Supported range is
/// theta in [1e-8, 2 pi - 1e-8]; the result is clamped to [0, 1].
double arc_event_probability(ArcAngle arc);

/// Probability that the diffusion started at w_hat hits b before a.
double hitting_probability(double kappa, HittingWindow win);

/// Moebius map H -> U with phi(0) = 1 and phi(inf) = e^{i theta}.
std::complex<double> conformal_map_phi(ArcAngle arc, std::complex<double> z);

/// phi-preimage of the origin: (-cot(theta/2), 1).
HalfPlanePoint theta_to_halfplane_point(ArcAngle arc);

/// Principal argument of x0 + i y0 in (0, pi).
double arg(HalfPlanePoint p);

}  // namespace arcperc::formulas
