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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arcperc/percolation.hpp"

// The interface is a walk on the degree-3 map whose faces are the in-disk
// hexagons plus two outer faces: S (black, outside the arc) and E (white,
// outside the rest of the circle). Black stays on the right throughout.

namespace arcperc::percolation {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double turn(Point a, Point b) { return std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y); }

// Unwrapped position of `angle` within circle arc c, or a value past c.end.
double unwrap_into(const CircleArc& c, double angle) { return c.begin + normalize_angle(angle - c.begin); }

bool angle_in_arc(double angle, const BoundaryArc& a) {
  return normalize_angle(angle - a.start) <= a.extent;
}

}  // namespace

InterfaceTrace trace_interface_beta(const DiskLattice& lattice, const Coloring& coloring,
                                    const BoundaryArc& arc) {
  lattice.require_generic(arc);
  const auto& arcs = lattice.circle_arcs();
  const auto& crossings = lattice.crossings();
  const std::size_t m = arcs.size();
  const double alpha0 = normalize_angle(arc.start);
  const double alpha1 = normalize_angle(arc.start + arc.extent);
  auto black = [&](SiteId s) { return coloring.black[s] != 0; };

  enum class Mode { segment, ccw, cw };
  Mode mode = Mode::ccw;
  SiteId site = kNoSite;  // segment: right-hand hexagon; arc: owner of the arc
  int dir = 0;            // segment direction
  std::size_t k = lattice.arc_index_at(alpha0);
  double pos = unwrap_into(arcs[k], alpha0);
  site = arcs[k].site;
  mode = black(site) ? Mode::cw : Mode::ccw;

  double total = 0.0;
  std::size_t edges = 0;
  const std::size_t limit = 8 * lattice.size() + 4 * m + 16;

  for (;;) {
    if (++edges > limit) throw std::logic_error("interface walk did not terminate");
    if (mode == Mode::segment) {
      const EdgeClip& clip = lattice.clip(site, dir);
      if (!clip.present()) throw std::logic_error("interface walk entered an edge outside the disk");
      total += turn(lattice.clip_point(site, dir, clip.t0), lattice.clip_point(site, dir, clip.t1));
      const SiteId left = lattice.neighbor(site, dir);
      if (clip.t1 < 1.0) {
        const auto c = static_cast<std::size_t>(clip.end_crossing);
        if (angle_in_arc(crossings[c].angle, arc)) {
          // Outer face black: follow the left hexagon's arc counter-clockwise.
          k = c;
          site = left;
          pos = arcs[k].begin;
          mode = Mode::ccw;
        } else {
          k = (c + m - 1) % m;
          pos = arcs[k].end;
          mode = Mode::cw;
        }
        if (arcs[k].site != site) throw std::logic_error("interface walk lost the circle arc owner");
        continue;
      }
      const SiteId third = lattice.neighbor(site, (dir + 5) % 6);
      if (black(third)) {
        site = third;
        dir = (dir + 1) % 6;
      } else {
        dir = (dir + 5) % 6;
      }
      continue;
    }

    const CircleArc& c = arcs[k];
    const double a1 = unwrap_into(c, alpha1);
    const double a0 = unwrap_into(c, alpha0);
    if (mode == Mode::ccw) {
      if (a1 > pos && a1 <= c.end) {
        total += a1 - pos;
        break;
      }
      if (a0 > pos && a0 <= c.end) throw std::logic_error("interface walk returned to its start");
      total += c.end - pos;
      const std::size_t j = (k + 1) % m;
      const SiteId next = crossings[j].ccw_site;
      if (black(next)) {
        dir = lattice.direction_to(next, site);
        site = next;
        mode = Mode::segment;
      } else {
        k = j;
        site = next;
        pos = arcs[k].begin;
      }
    } else {
      if (a1 >= c.begin && a1 < pos) {
        total -= pos - a1;
        break;
      }
      if (a0 >= c.begin && a0 < pos) throw std::logic_error("interface walk returned to its start");
      total -= pos - c.begin;
      const SiteId next = crossings[k].cw_site;
      if (black(next)) {
        k = (k + m - 1) % m;
        site = next;
        pos = arcs[k].end;
      } else {
        dir = lattice.direction_to(site, next);
        mode = Mode::segment;
      }
    }
    if (mode == Mode::segment && dir < 0) throw std::logic_error("interface walk: crossing between non-neighbours");
  }

  total -= arc.extent;
  InterfaceTrace out;
  // Counted clockwise: one full clockwise turn around 0 gives +1.
  out.winding = static_cast<int>(std::lround(-total / kTwoPi));
  out.event_a = out.winding == 1;
  out.edges = edges;
  return out;
}

}  // namespace arcperc::percolation
