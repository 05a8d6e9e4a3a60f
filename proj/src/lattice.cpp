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

#include "arcperc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "arcperc/error.hpp"

namespace arcperc::percolation {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kGenericTol = 1e-12;

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point lerp(Point a, Point b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

double circular_distance(double a, double b) {
  const double d = std::abs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

struct RawCrossing {
  Crossing c;
  SiteId site;
  int dir;
  bool at_start;
};

}  // namespace

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool arc_meets(const CircleArc& c, const BoundaryArc& a) {
  const double s = normalize_angle(c.begin - a.start);
  const double e = s + (c.end - c.begin);
  return s <= a.extent || e >= kTwoPi;
}

bool arc_meets_complement(const CircleArc& c, const BoundaryArc& a) {
  const double s = normalize_angle(c.begin - a.start);
  const double e = s + (c.end - c.begin);
  return e > a.extent;
}

double DiskLattice::default_margin(double delta) { return std::max(10.0 * delta, 0.1); }

DiskLattice::DiskLattice(double delta, double margin) : delta_(delta), margin_(margin) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    std::ostringstream msg;
    msg << "lattice mesh delta must lie in (0, 1] (got " << delta << ")";
    throw DomainError(msg.str());
  }
  if (!(margin >= 2.0 * delta) || !std::isfinite(margin)) {
    std::ostringstream msg;
    msg << "lattice margin must be at least 2 delta (got margin=" << margin << ", delta=" << delta << ")";
    throw DomainError(msg.str());
  }
  build_sites();
  build_clips();
  build_circle();
}

void DiskLattice::build_sites() {
  const double ox = delta_ / 7.0;
  const double oy = delta_ / 13.0;
  const double radius = 1.0 + margin_;
  const double row_height = delta_ * kSqrt3 / 2.0;
  r_max_ = static_cast<int>(std::ceil(radius / row_height)) + 1;
  r_min_ = -r_max_;
  q_min_ = static_cast<int>(std::floor(-radius / delta_ - r_max_ / 2.0)) - 2;
  q_max_ = static_cast<int>(std::ceil(radius / delta_ + r_max_ / 2.0)) + 2;
  const int width = q_max_ - q_min_ + 1;
  const int height = r_max_ - r_min_ + 1;
  index_.assign(static_cast<std::size_t>(width) * height, kNoSite);

  for (int r = r_min_; r <= r_max_; ++r) {
    for (int q = q_min_; q <= q_max_; ++q) {
      const Point c{ox + delta_ * (q + 0.5 * r), oy + row_height * r};
      if (std::hypot(c.x, c.y) > radius) continue;
      index_[static_cast<std::size_t>(r - r_min_) * width + (q - q_min_)] = static_cast<SiteId>(q_.size());
      q_.push_back(q);
      r_.push_back(r);
      center_.push_back(c);
    }
  }
  neighbors_.assign(6 * size(), kNoSite);
  for (SiteId s = 0; s < static_cast<SiteId>(size()); ++s) {
    for (int d = 0; d < kDirections; ++d) {
      neighbors_[6 * s + d] = find(q_[s] + kNeighborOffsets[d][0], r_[s] + kNeighborOffsets[d][1]);
    }
  }
}

SiteId DiskLattice::find(int q, int r) const {
  if (q < q_min_ || q > q_max_ || r < r_min_ || r > r_max_) return kNoSite;
  const int width = q_max_ - q_min_ + 1;
  return index_[static_cast<std::size_t>(r - r_min_) * width + (q - q_min_)];
}

int DiskLattice::direction_to(SiteId from, SiteId to) const {
  for (int d = 0; d < kDirections; ++d) {
    if (neighbor(from, d) == to) return d;
  }
  return -1;
}

Point DiskLattice::vertex(SiteId s, int k) const {
  const double rho = delta_ / kSqrt3;
  const double angle = kPi / 6.0 + kPi / 3.0 * ((k % 6 + 6) % 6);
  return {center_[s].x + rho * std::cos(angle), center_[s].y + rho * std::sin(angle)};
}

Point DiskLattice::clip_point(SiteId s, int d, double t) const {
  return lerp(vertex(s, d), vertex(s, d + 5), t);
}

void DiskLattice::build_clips() {
  const std::size_t n = size();
  clips_.assign(6 * n, EdgeClip{});
  std::vector<std::uint8_t> done(6 * n, 0);
  std::vector<RawCrossing> raw;

  for (SiteId s = 0; s < static_cast<SiteId>(n); ++s) {
    for (int d = 0; d < kDirections; ++d) {
      if (done[6 * s + d]) continue;
      const Point p = vertex(s, d);
      const Point qv = vertex(s, d + 5);
      const Point e = sub(qv, p);
      const double a = dot(e, e);
      const double b = 2.0 * dot(p, e);
      const double c = dot(p, p) - 1.0;
      const double disc = b * b - 4.0 * a * c;
      EdgeClip clip;
      if (disc > 0.0) {
        const double root = std::sqrt(disc);
        const double qq = -0.5 * (b + std::copysign(root, b));
        double t_lo = qq / a;
        double t_hi = c / qq;
        if (t_lo > t_hi) std::swap(t_lo, t_hi);
        const bool touches = t_hi > -kGenericTol && t_lo < 1.0 + kGenericTol;
        if (touches) {
          if (root / a < 1e-9) throw DomainError("degenerate lattice: hexagon edge tangent to the unit circle");
          for (double t : {t_lo, t_hi}) {
            if (std::abs(t) < kGenericTol || std::abs(t - 1.0) < kGenericTol) {
              throw DomainError("degenerate lattice: hexagon vertex on the unit circle");
            }
          }
        }
        if (t_lo < 1.0 && t_hi > 0.0) {
          clip.t0 = std::max(0.0, t_lo);
          clip.t1 = std::min(1.0, t_hi);
          // Right-hand normal of e points into s.
          const Point into_s{e.y, -e.x};
          auto record = [&](double t, bool at_start) {
            const Point x = lerp(p, qv, t);
            Crossing cr;
            cr.angle = normalize_angle(std::atan2(x.y, x.x));
            cr.point = x;
            const Point tangent{-std::sin(cr.angle), std::cos(cr.angle)};
            const SiteId other = neighbor(s, d);
            const bool ccw_into_s = dot(tangent, into_s) > 0.0;
            cr.ccw_site = ccw_into_s ? s : other;
            cr.cw_site = ccw_into_s ? other : s;
            raw.push_back({cr, s, d, at_start});
          };
          if (t_lo > 0.0) record(t_lo, true);
          if (t_hi < 1.0) record(t_hi, false);
        }
      }
      clips_[6 * s + d] = clip;
      done[6 * s + d] = 1;
      const SiteId other = neighbor(s, d);
      if (other != kNoSite) {
        const int back = (d + 3) % 6;
        EdgeClip mirrored;
        if (clip.present()) {
          mirrored.t0 = 1.0 - clip.t1;
          mirrored.t1 = 1.0 - clip.t0;
        }
        clips_[6 * other + back] = mirrored;
        done[6 * other + back] = 1;
      }
    }
  }

  std::sort(raw.begin(), raw.end(),
            [](const RawCrossing& x, const RawCrossing& y) { return x.c.angle < y.c.angle; });
  crossings_.clear();
  crossings_.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawCrossing& rc = raw[i];
    if (rc.c.ccw_site == kNoSite || rc.c.cw_site == kNoSite) {
      throw std::logic_error("lattice margin too small: boundary edge without both hexagons");
    }
    crossings_.push_back(rc.c);
    const auto idx = static_cast<std::int32_t>(i);
    EdgeClip& clip = clips_[6 * rc.site + rc.dir];
    (rc.at_start ? clip.start_crossing : clip.end_crossing) = idx;
    const SiteId other = neighbor(rc.site, rc.dir);
    EdgeClip& back = clips_[6 * other + (rc.dir + 3) % 6];
    (rc.at_start ? back.end_crossing : back.start_crossing) = idx;
  }

  in_disk_.assign(n, 0);
  inside_open_.assign(n, 0);
  disk_edges_.assign(n, 0);
  in_disk_sites_.clear();
  double best = 1e300;
  for (SiteId s = 0; s < static_cast<SiteId>(n); ++s) {
    std::uint8_t mask = 0;
    bool all_inside = true;
    for (int d = 0; d < kDirections; ++d) {
      if (clips_[6 * s + d].present()) mask |= static_cast<std::uint8_t>(1u << d);
      const Point v = vertex(s, d);
      if (dot(v, v) >= 1.0) all_inside = false;
    }
    disk_edges_[s] = mask;
    inside_open_[s] = all_inside ? 1 : 0;
    if (mask != 0) {
      in_disk_[s] = 1;
      in_disk_sites_.push_back(s);
      for (int d = 0; d < kDirections; ++d) {
        if (neighbor(s, d) == kNoSite) throw std::logic_error("lattice margin too small for in-disk site");
      }
      const double dist = std::hypot(center_[s].x, center_[s].y);
      if (dist < best) {
        best = dist;
        origin_ = s;
      }
    }
  }
  if (origin_ == kNoSite) throw std::logic_error("lattice has no hexagon meeting the disk");
  // The origin must be interior to its hexagon: distance to each edge line > tol.
  for (int d = 0; d < kDirections; ++d) {
    const Point p = vertex(origin_, d);
    const Point e = sub(vertex(origin_, d + 5), p);
    const double dist = std::abs(e.x * p.y - e.y * p.x) / std::sqrt(dot(e, e));
    if (dist < kGenericTol) throw DomainError("degenerate lattice: origin on a hexagon boundary");
  }
}

void DiskLattice::build_circle() {
  const std::size_t m = crossings_.size();
  if (m < 3) throw std::logic_error("unit circle crosses too few hexagon edges");
  for (std::size_t i = 0; i < m; ++i) {
    const double next = i + 1 < m ? crossings_[i + 1].angle : crossings_[0].angle + kTwoPi;
    if (next - crossings_[i].angle < kGenericTol) {
      throw DomainError("degenerate lattice: two circle crossings coincide");
    }
  }
  if (crossings_.front().angle < kGenericTol || crossings_.back().angle > kTwoPi - kGenericTol) {
    throw DomainError("degenerate lattice: the point 1 lies on a hexagon boundary");
  }
  arcs_.clear();
  arcs_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const double end = j == 0 ? crossings_[0].angle + kTwoPi : crossings_[j].angle;
    if (crossings_[i].ccw_site != crossings_[j].cw_site) {
      throw std::logic_error("inconsistent circle partition between consecutive crossings");
    }
    arcs_.push_back({crossings_[i].angle, end, crossings_[i].ccw_site});
  }
  site_arc_begin_.assign(size() + 1, 0);
  for (const CircleArc& a : arcs_) ++site_arc_begin_[a.site + 1];
  for (std::size_t s = 0; s < size(); ++s) site_arc_begin_[s + 1] += site_arc_begin_[s];
  site_arcs_.assign(arcs_.size(), CircleArc{});
  std::vector<std::int32_t> fill(site_arc_begin_.begin(), site_arc_begin_.end() - 1);
  for (const CircleArc& a : arcs_) site_arcs_[fill[a.site]++] = a;
}

std::span<const CircleArc> DiskLattice::arcs_of(SiteId s) const {
  return std::span<const CircleArc>(site_arcs_).subspan(site_arc_begin_[s],
                                                         site_arc_begin_[s + 1] - site_arc_begin_[s]);
}

std::size_t DiskLattice::arc_index_at(double angle) const {
  const double a = normalize_angle(angle);
  auto it = std::upper_bound(crossings_.begin(), crossings_.end(), a,
                             [](double v, const Crossing& c) { return v < c.angle; });
  if (it == crossings_.begin()) return arcs_.size() - 1;
  return static_cast<std::size_t>(it - crossings_.begin()) - 1;
}

void DiskLattice::require_generic(const BoundaryArc& arc) const {
  if (!(arc.extent > 0.0 && arc.extent < kTwoPi) || !std::isfinite(arc.start)) {
    std::ostringstream msg;
    msg << "arc extent must lie in (0, 2 pi) (got " << arc.extent << ")";
    throw DomainError(msg.str());
  }
  for (double endpoint : {arc.start, arc.start + arc.extent}) {
    const std::size_t i = arc_index_at(endpoint);
    const std::size_t j = (i + 1) % crossings_.size();
    if (circular_distance(endpoint, crossings_[i].angle) < kGenericTol ||
        circular_distance(endpoint, crossings_[j].angle) < kGenericTol) {
      std::ostringstream msg;
      msg << "arc endpoint at angle " << normalize_angle(endpoint)
          << " lies on a hexagon boundary at this mesh; choose a slightly different angle";
      throw DomainError(msg.str());
    }
  }
}

bool DiskLattice::meets_arc(SiteId s, const BoundaryArc& arc) const {
  for (const CircleArc& c : arcs_of(s)) {
    if (arc_meets(c, arc)) return true;
  }
  return false;
}

bool DiskLattice::meets_complement(SiteId s, const BoundaryArc& arc) const {
  for (const CircleArc& c : arcs_of(s)) {
    if (arc_meets_complement(c, arc)) return true;
  }
  return false;
}

}  // namespace arcperc::percolation
