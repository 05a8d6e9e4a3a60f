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

// Reference computations for the tests. None of these call into the
// library's evaluation code paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "arcperc/lattice.hpp"
#include "arcperc/percolation.hpp"

namespace oracle {

// Defining power series of F(1/2, b; 3/2; z), |z| < 1.
inline long double hyp2f1_series(long double b, long double z) {
  long double term = 1.0L, sum = 1.0L;
  for (int n = 0; n < 200000; ++n) {
    term *= (0.5L + n) * (b + n) / ((1.5L + n) * (n + 1.0L)) * z;
    sum += term;
    if (std::fabs(term) < 1e-21L * std::fabs(sum)) break;
  }
  return sum;
}

// Composite Gauss-Legendre (8 points) on [a, b] with `pieces` panels.
inline long double gauss_legendre(const std::function<long double(long double)>& g, long double a,
                                  long double b, int pieces) {
  static const long double x[4] = {0.1834346424956498049394761L, 0.5255324099163289858177390L,
                                   0.7966664774136267395915539L, 0.9602898564975362316835609L};
  static const long double w[4] = {0.3626837833783619829651504L, 0.3137066458778872873379622L,
                                   0.2223810344533744705443560L, 0.1012285362903762591525314L};
  long double total = 0.0L;
  const long double h = (b - a) / pieces;
  for (int p = 0; p < pieces; ++p) {
    const long double mid = a + (p + 0.5L) * h, half = 0.5L * h;
    for (int k = 0; k < 4; ++k) total += w[k] * half * (g(mid - half * x[k]) + g(mid + half * x[k]));
  }
  return total;
}

// f(w) = integral_0^w (1 + t^2)^(-4/kappa) dt.
// Integrand of the t > 1 part after t = 1/s, s = u^k with k = 1/(2b - 1):
// k (1 + s^2)^(-b). Near u = 0 it behaves like u^(2k), so panels are
// graded geometrically towards 0. Integrates u over [lo, hi].
inline long double tail_part(long double b, long double lo, long double hi = 1.0L) {
  const long double k = 1.0L / (2 * b - 1);
  auto h = [b, k](long double u) {
    const long double s = std::pow(u, k);
    return k * std::pow(1.0L + s * s, -b);
  };
  long double total = 0.0L;
  while (hi > lo) {
    const long double a = std::fmax(lo, 0.5L * hi);
    total += gauss_legendre(h, a, hi, 64);
    hi = a;
    if (hi < 1e-40L) break;  // remainder is below k * 1e-40
  }
  return total;
}

inline long double f_quadrature(long double kappa, long double w) {
  const long double b = 4.0L / kappa;
  auto g = [b](long double t) { return std::pow(1.0L + t * t, -b); };
  const long double sign = w < 0 ? -1.0L : 1.0L;
  const long double aw = std::fabs(w);
  if (aw <= 1.0L) return sign * gauss_legendre(g, 0.0L, aw, 64);
  return sign * (gauss_legendre(g, 0.0L, 1.0L, 64) + tail_part(b, std::pow(1.0L / aw, 2 * b - 1)));
}

inline long double f_limit_quadrature(long double kappa) {
  const long double b = 4.0L / kappa;
  auto g = [b](long double t) { return std::pow(1.0L + t * t, -b); };
  return gauss_legendre(g, 0.0L, 1.0L, 64) + tail_part(b, 0.0L);
}

inline arcperc::percolation::SiteId nearest_site(const arcperc::percolation::DiskLattice& lat,
                                                 arcperc::percolation::Point p) {
  arcperc::percolation::SiteId best = arcperc::percolation::kNoSite;
  double best_d = 1e300;
  for (arcperc::percolation::SiteId s = 0; s < static_cast<arcperc::percolation::SiteId>(lat.size()); ++s) {
    const auto c = lat.center(s);
    const double d = std::hypot(c.x - p.x, c.y - p.y);
    if (d < best_d) {
      best_d = d;
      best = s;
    }
  }
  return best;
}

// Distance from the origin to the segment ab.
inline double origin_segment_distance(arcperc::percolation::Point a, arcperc::percolation::Point b) {
  const double ex = b.x - a.x, ey = b.y - a.y;
  double t = -(a.x * ex + a.y * ey) / (ex * ex + ey * ey);
  t = std::fmax(0.0, std::fmin(1.0, t));
  return std::hypot(a.x + t * ex, a.y + t * ey);
}

// Nested-cluster chain by definition: C_{n+1} is the cluster holding the
// outer boundary of C_n, where the outer boundary is what a flood from the
// lattice rim through the complement of C_n touches.
struct ChainResult {
  int m = 0;
  bool black = false;
};

inline ChainResult nested_chain(const arcperc::percolation::DiskLattice& lat,
                                const arcperc::percolation::Coloring& col) {
  using arcperc::percolation::SiteId;
  const auto n = static_cast<SiteId>(lat.size());
  auto cluster_of = [&](SiteId seed) {
    std::vector<char> in(n, 0);
    std::queue<SiteId> q;
    q.push(seed);
    in[seed] = 1;
    while (!q.empty()) {
      const SiteId s = q.front();
      q.pop();
      for (int d = 0; d < 6; ++d) {
        const SiteId t = lat.neighbor(s, d);
        if (t >= 0 && !in[t] && col.black[t] == col.black[seed]) {
          in[t] = 1;
          q.push(t);
        }
      }
    }
    return in;
  };
  SiteId seed = lat.origin_site();
  for (int m = 1;; ++m) {
    const auto in = cluster_of(seed);
    bool inside = true;
    for (SiteId s = 0; s < n; ++s) inside = inside && (!in[s] || lat.inside_open_disk(s));
    if (!inside) return {m, col.black[seed] != 0};
    std::vector<char> reached(n, 0);
    std::queue<SiteId> q;
    for (SiteId s = 0; s < n; ++s) {
      bool rim = false;
      for (int d = 0; d < 6; ++d) rim = rim || lat.neighbor(s, d) < 0;
      if (rim && !in[s]) {
        reached[s] = 1;
        q.push(s);
      }
    }
    SiteId next = -1;
    while (!q.empty()) {
      const SiteId s = q.front();
      q.pop();
      for (int d = 0; d < 6; ++d) {
        const SiteId t = lat.neighbor(s, d);
        if (t < 0) continue;
        if (in[t]) {
          next = s;
          continue;
        }
        if (!reached[t]) {
          reached[t] = 1;
          q.push(t);
        }
      }
    }
    seed = next;
  }
}

// Event A straight from its definition: some single black cluster K of the
// disk meets the arc and cuts 0 off from the rest of the circle.
inline bool event_oracle(const arcperc::percolation::DiskLattice& lat, const arcperc::percolation::Coloring& col,
                         const arcperc::percolation::BoundaryArc& arc) {
  using arcperc::percolation::SiteId;
  const auto n = static_cast<SiteId>(lat.size());
  std::vector<int> label(n, -1);
  int next = 0;
  for (SiteId s : lat.in_disk_sites()) {
    if (!col.black[s] || label[s] >= 0) continue;
    std::queue<SiteId> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      const SiteId u = q.front();
      q.pop();
      for (int d = 0; d < 6; ++d) {
        if (!((lat.disk_edges(u) >> d) & 1u)) continue;
        const SiteId v = lat.neighbor(u, d);
        if (col.black[v] && label[v] < 0) {
          label[v] = next;
          q.push(v);
        }
      }
    }
    ++next;
  }
  for (int k = 0; k < next; ++k) {
    bool touches = false;
    for (SiteId s : lat.in_disk_sites()) touches = touches || (label[s] == k && lat.meets_arc(s, arc));
    if (!touches) continue;
    if (label[lat.origin_site()] == k) return true;
    std::vector<char> seen(n, 0);
    std::queue<SiteId> q;
    q.push(lat.origin_site());
    seen[lat.origin_site()] = 1;
    bool escapes = false;
    while (!q.empty() && !escapes) {
      const SiteId u = q.front();
      q.pop();
      escapes = lat.meets_complement(u, arc);
      for (int d = 0; d < 6; ++d) {
        if (!((lat.disk_edges(u) >> d) & 1u)) continue;
        const SiteId v = lat.neighbor(u, d);
        if (!seen[v] && label[v] != k) {
          seen[v] = 1;
          q.push(v);
        }
      }
    }
    if (!escapes) return true;
  }
  return false;
}

}  // namespace oracle
