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

// Gamma function and the hypergeometric family F(1/2, b; 3/2; z), z <= 0.
//
// F(1/2, b; 3/2; -w^2) * w is the integral of (1 + t^2)^(-b) over [0, w],
// which is how the large-|z| branch is organised: the integral to infinity
// has a closed form in Gamma functions and the remaining tail is an
// incomplete Beta integral with a fast series.

namespace arcperc::specialfn {

/// Gamma(x) for 0 < x <= 170. Throws DomainError for x <= 0.
double gamma(double x);

/// F(1/2, b; 3/2; z) for b > 1/2 and z <= 0, any magnitude of z.
double hyp2f1_half(double b, double z);

/// w * F(1/2, 4/kappa; 3/2; -w^2); odd, increasing, bounded by f_limit(kappa).
double schramm_f(double kappa, double w);

/// lim_{w -> +inf} schramm_f(kappa, w) = sqrt(pi) Gamma((8-kappa)/(2kappa)) / (2 Gamma(4/kappa)).
double f_limit(double kappa);

/// f_limit(kappa) - schramm_f(kappa, w) for w >= 0, computed without cancellation.
double f_tail(double kappa, double w);

}  // namespace arcperc::specialfn
