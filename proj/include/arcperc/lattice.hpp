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

// Hexagonal faces of the triangular lattice of mesh delta, clipped to the
// closed unit disk.
//
// Site (q, r) has centre offset + delta * (q + r/2, r * sqrt(3)/2) with the
// global offset (delta/7, delta/13). Hexagons are pointy-top with
// circumradius delta/sqrt(3); vertex k sits at angle 30 + 60k degrees and is
// shared with neighbours k and k+1. The oriented edge (s, d) runs from vertex
// d to vertex d-1 of s, so s lies on its right.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace arcperc::percolation {

inline constexpr int kDirections = 6;
inline constexpr std::array<std::array<int, 2>, kDirections> kNeighborOffsets = {
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

using SiteId = std::int32_t;
inline constexpr SiteId kNoSite = -1;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// The closed boundary arc {e^{is} : s in [start, start + extent]}.
struct BoundaryArc {
  double start = 0.0;
  double extent = 0.0;
};

/// Point where a hexagon edge crosses the unit circle.
struct Crossing {
  double angle = 0.0;  ///< in [0, 2 pi)
  Point point;
  SiteId ccw_site = kNoSite;  ///< hexagon entered when moving counter-clockwise
  SiteId cw_site = kNoSite;
};

/// Maximal piece of the unit circle inside one hexagon: angles [begin, end],
/// begin in [0, 2 pi), end > begin (end may exceed 2 pi).
struct CircleArc {
  double begin = 0.0;
  double end = 0.0;
  SiteId site = kNoSite;
};

/// Part of the oriented edge (s, d) inside the closed disk, as a parameter
/// interval [t0, t1] of the segment vertex d -> vertex d-1.
struct EdgeClip {
  double t0 = 1.0;
  double t1 = 0.0;
  std::int32_t start_crossing = -1;  ///< crossing at t0 when t0 > 0
  std::int32_t end_crossing = -1;    ///< crossing at t1 when t1 < 1

  bool present() const { return t0 < t1; }
};

class DiskLattice {
 public:
  /// Requires 0 < delta <= 1 and margin >= 2 delta. Throws DomainError if the
  /// geometry is degenerate (a vertex on the circle, a tangent edge, or the
  /// point 1 on a hexagon boundary).
  DiskLattice(double delta, double margin);
  explicit DiskLattice(double delta) : DiskLattice(delta, default_margin(delta)) {}

  static double default_margin(double delta);

  double delta() const { return delta_; }
  double margin() const { return margin_; }
  std::size_t size() const { return q_.size(); }
  std::size_t in_disk_count() const { return in_disk_sites_.size(); }

  int q(SiteId s) const { return q_[s]; }
  int r(SiteId s) const { return r_[s]; }
  Point center(SiteId s) const { return center_[s]; }
  Point vertex(SiteId s, int k) const;
  SiteId neighbor(SiteId s, int d) const { return neighbors_[6 * s + d]; }
  SiteId find(int q, int r) const;
  /// Direction d with neighbor(from, d) == to, or -1.
  int direction_to(SiteId from, SiteId to) const;

  /// Hexagon meets the closed unit disk.
  bool in_disk(SiteId s) const { return in_disk_[s] != 0; }
  /// Hexagon lies inside the open unit disk.
  bool inside_open_disk(SiteId s) const { return inside_open_[s] != 0; }
  /// Bit d set when the edge shared with neighbour d meets the closed disk.
  std::uint8_t disk_edges(SiteId s) const { return disk_edges_[s]; }
  const EdgeClip& clip(SiteId s, int d) const { return clips_[6 * s + d]; }
  Point clip_point(SiteId s, int d, double t) const;

  std::span<const SiteId> in_disk_sites() const { return in_disk_sites_; }
  SiteId origin_site() const { return origin_; }

  /// Crossings sorted by angle; circle_arcs()[i] runs from crossing i to i+1.
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<CircleArc>& circle_arcs() const { return arcs_; }
  std::span<const CircleArc> arcs_of(SiteId s) const;
  /// Index of the circle arc containing the given angle.
  std::size_t arc_index_at(double angle) const;

  /// Throws DomainError unless 0 < extent < 2 pi and neither endpoint is
  /// within 1e-12 of a crossing.
  void require_generic(const BoundaryArc& arc) const;

  bool meets_arc(SiteId s, const BoundaryArc& arc) const;
  bool meets_complement(SiteId s, const BoundaryArc& arc) const;

 private:
  void build_sites();
  void build_clips();
  void build_circle();

  double delta_;
  double margin_;
  int q_min_ = 0, q_max_ = 0, r_min_ = 0, r_max_ = 0;
  std::vector<SiteId> index_;
  std::vector<int> q_, r_;
  std::vector<Point> center_;
  std::vector<SiteId> neighbors_;
  std::vector<std::uint8_t> in_disk_, inside_open_, disk_edges_;
  std::vector<EdgeClip> clips_;
  std::vector<SiteId> in_disk_sites_;
  SiteId origin_ = kNoSite;
  std::vector<Crossing> crossings_;
  std::vector<CircleArc> arcs_;
  std::vector<std::int32_t> site_arc_begin_;
  std::vector<CircleArc> site_arcs_;
};

/// Angle reduced to [0, 2 pi).
double normalize_angle(double a);

/// Circle-arc predicates against a closed boundary arc.
bool arc_meets(const CircleArc& c, const BoundaryArc& a);
bool arc_meets_complement(const CircleArc& c, const BoundaryArc& a);

}  // namespace arcperc::percolation
