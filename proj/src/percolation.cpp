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

#include "arcperc/percolation.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "arcperc/error.hpp"
#include "arcperc/rng.hpp"

namespace arcperc::percolation {

Coloring Coloring::swapped() const {
  Coloring out = *this;
  for (auto& b : out.black) b = b ? 0 : 1;
  return out;
}

Coloring uniform_coloring(const DiskLattice& lattice, Color c) {
  Coloring out;
  out.black.assign(lattice.size(), c == Color::black ? 1 : 0);
  return out;
}

Coloring sample_coloring(const DiskLattice& lattice, std::uint64_t seed, std::uint64_t index) {
  Coloring out;
  out.seed = seed;
  out.index = index;
  out.black.resize(lattice.size());
  mc::CounterRng rng(seed, index);
  std::uint32_t bits = 0;
  for (std::size_t s = 0; s < lattice.size(); ++s) {
    if (s % 32 == 0) bits = rng.next_u32();
    out.black[s] = static_cast<std::uint8_t>(bits & 1u);
    bits >>= 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

ClusterSet::ClusterSet(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), SiteId{0});
}

SiteId ClusterSet::find(SiteId s) {
  while (parent_[s] != s) {
    parent_[s] = parent_[parent_[s]];
    s = parent_[s];
  }
  return s;
}

bool ClusterSet::unite(SiteId a, SiteId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

ClusterSet ClusterSet::plane_clusters(const DiskLattice& lattice, const Coloring& coloring) {
  ClusterSet set(lattice.size());
  for (SiteId s = 0; s < static_cast<SiteId>(lattice.size()); ++s) {
    for (int d = 0; d < 3; ++d) {
      const SiteId t = lattice.neighbor(s, d);
      if (t != kNoSite && coloring.black[s] == coloring.black[t]) set.unite(s, t);
    }
  }
  return set;
}

ClusterSet ClusterSet::disk_clusters(const DiskLattice& lattice, const Coloring& coloring, Color color) {
  ClusterSet set(lattice.size());
  for (SiteId s : lattice.in_disk_sites()) {
    if (coloring.color(s) != color) continue;
    const std::uint8_t mask = lattice.disk_edges(s);
    for (int d = 0; d < 3; ++d) {
      if (!(mask & (1u << d))) continue;
      const SiteId t = lattice.neighbor(s, d);
      if (coloring.color(t) == color) set.unite(s, t);
    }
  }
  return set;
}

bool ArcEventOutcome::identity_holds() const {
  const bool predicted = x_stat == 1.0 || (x_stat == 0.5 && cm_color == Color::black);
  return predicted == event_a;
}

// ---------------------------------------------------------------------------

ConfigurationAnalysis::ConfigurationAnalysis(const DiskLattice& lattice, const Coloring& coloring)
    : lattice_(lattice), coloring_(coloring), mark_(lattice.size(), 0) {
  if (coloring.black.size() != lattice.size()) {
    throw DomainError("colouring size does not match the lattice");
  }
  stack_.reserve(lattice.size());
}

bool ConfigurationAnalysis::event_a(const BoundaryArc& arc) {
  lattice_.require_generic(arc);
  // R: union of the black disk clusters that meet the arc.
  ClusterSet black = ClusterSet::disk_clusters(lattice_, coloring_, Color::black);
  std::vector<std::uint8_t> root_in_r(lattice_.size(), 0);
  for (const CircleArc& c : lattice_.circle_arcs()) {
    if (coloring_.black[c.site] && arc_meets(c, arc)) root_in_r[black.find(c.site)] = 1;
  }
  auto in_r = [&](SiteId s) { return coloring_.black[s] && root_in_r[black.find(s)]; };

  const SiteId origin = lattice_.origin_site();
  if (in_r(origin)) return true;

  // Flood the complement of R inside the disk from the origin; reaching the
  // boundary outside the arc means the origin is not enclosed.
  std::fill(mark_.begin(), mark_.end(), 0);
  stack_.clear();
  stack_.push_back(origin);
  mark_[origin] = 1;
  while (!stack_.empty()) {
    const SiteId s = stack_.back();
    stack_.pop_back();
    if (lattice_.meets_complement(s, arc)) return false;
    const std::uint8_t mask = lattice_.disk_edges(s);
    for (int d = 0; d < kDirections; ++d) {
      if (!(mask & (1u << d))) continue;
      const SiteId t = lattice_.neighbor(s, d);
      if (mark_[t] || in_r(t)) continue;
      mark_[t] = 1;
      stack_.push_back(t);
    }
  }
  return true;
}

const ConfigurationAnalysis::Chain& ConfigurationAnalysis::chain() {
  if (have_chain_) return chain_;
  // C_1 is the cluster of the origin hexagon; C_{n+1} is the cluster of the
  // right neighbour of the rightmost hexagon of C_n, which is always on the
  // outer boundary of C_n. Stop at the first cluster not inside the open disk.
  std::fill(mark_.begin(), mark_.end(), 0);
  SiteId seed = lattice_.origin_site();
  int m = 1;
  for (;;) {
    const std::uint8_t colour = coloring_.black[seed];
    bool escapes = !lattice_.inside_open_disk(seed);
    SiteId rightmost = seed;
    stack_.clear();
    stack_.push_back(seed);
    mark_[seed] = 1;
    while (!stack_.empty() && !escapes) {
      const SiteId s = stack_.back();
      stack_.pop_back();
      if (lattice_.center(s).x > lattice_.center(rightmost).x) rightmost = s;
      for (int d = 0; d < kDirections; ++d) {
        const SiteId t = lattice_.neighbor(s, d);
        if (mark_[t] || coloring_.black[t] != colour) continue;
        if (!lattice_.inside_open_disk(t)) {
          escapes = true;
          break;
        }
        mark_[t] = 1;
        stack_.push_back(t);
      }
    }
    if (escapes) {
      chain_ = {m, seed, colour ? Color::black : Color::white};
      break;
    }
    seed = lattice_.neighbor(rightmost, 0);
    ++m;
  }
  have_chain_ = true;
  return chain_;
}

ArcEventOutcome ConfigurationAnalysis::x_statistic(const BoundaryArc& arc) {
  ArcEventOutcome out;
  out.event_a = event_a(arc);
  const Chain& c = chain();
  out.m = c.m;
  out.cm_color = c.color;

  // C'_m: the component of C_m within the closed disk that contains the seed.
  const std::uint8_t colour = c.color == Color::black ? 1 : 0;
  std::fill(mark_.begin(), mark_.end(), 0);
  stack_.clear();
  stack_.push_back(c.seed);
  mark_[c.seed] = 1;
  bool touches_arc = false;
  bool touches_rest = false;
  while (!stack_.empty()) {
    const SiteId s = stack_.back();
    stack_.pop_back();
    touches_arc = touches_arc || lattice_.meets_arc(s, arc);
    touches_rest = touches_rest || lattice_.meets_complement(s, arc);
    const std::uint8_t mask = lattice_.disk_edges(s);
    for (int d = 0; d < kDirections; ++d) {
      if (!(mask & (1u << d))) continue;
      const SiteId t = lattice_.neighbor(s, d);
      if (mark_[t] || coloring_.black[t] != colour) continue;
      mark_[t] = 1;
      stack_.push_back(t);
    }
  }
  if (!touches_arc && !touches_rest) {
    throw std::logic_error("nested cluster chain ended on a component that misses the circle");
  }
  out.x_stat = !touches_rest ? 1.0 : (!touches_arc ? 0.0 : 0.5);
  return out;
}

bool detect_event_a(const DiskLattice& lattice, const Coloring& coloring, const BoundaryArc& arc) {
  ConfigurationAnalysis analysis(lattice, coloring);
  return analysis.event_a(arc);
}

ArcEventOutcome compute_x_statistic(const DiskLattice& lattice, const Coloring& coloring,
                                    const BoundaryArc& arc) {
  ConfigurationAnalysis analysis(lattice, coloring);
  return analysis.x_statistic(arc);
}

// ---------------------------------------------------------------------------

std::vector<ArcEstimate> estimate_arc_sweep(const DiskLattice& lattice, const std::vector<double>& thetas,
                                            std::uint64_t n_samples, std::uint64_t seed, unsigned workers) {
  if (n_samples < 100) throw DomainError("estimate_arc_sweep: need at least 100 samples");
  std::vector<BoundaryArc> arcs;
  for (double theta : thetas) {
    const BoundaryArc arc{0.0, theta};
    lattice.require_generic(arc);
    arcs.push_back(arc);
  }
  const std::size_t k = arcs.size();
  // Channels: 2 per arc (indicator, X) plus one identity counter per arc.
  const auto tallies = mc::parallel_tally_dynamic(
      n_samples, workers, 3 * k, [&](std::uint64_t i, std::span<mc::Outcome> out) {
        const Coloring coloring = sample_coloring(lattice, seed, i);
        ConfigurationAnalysis analysis(lattice, coloring);
        for (std::size_t j = 0; j < k; ++j) {
          const ArcEventOutcome o = analysis.x_statistic(arcs[j]);
          out[3 * j] = o.event_a ? mc::Outcome::one : mc::Outcome::zero;
          out[3 * j + 1] = o.x_stat == 1.0 ? mc::Outcome::one
                                           : (o.x_stat == 0.5 ? mc::Outcome::half : mc::Outcome::zero);
          out[3 * j + 2] = o.identity_holds() ? mc::Outcome::zero : mc::Outcome::one;
        }
      });
  std::vector<ArcEstimate> result;
  for (std::size_t j = 0; j < k; ++j) {
    ArcEstimate e;
    e.theta = thetas[j];
    e.indicator = mc::summarize(tallies[3 * j], seed, mc::ValueKind::indicator);
    e.x_mean = mc::summarize(tallies[3 * j + 1], seed, mc::ValueKind::three_valued);
    e.identity_violations = tallies[3 * j + 2].ones;
    result.push_back(e);
  }
  return result;
}

ArcEstimate estimate_arc_probability(double delta, double theta, std::uint64_t n_samples, std::uint64_t seed,
                                     unsigned workers) {
  const DiskLattice lattice(delta);
  return estimate_arc_sweep(lattice, {theta}, n_samples, seed, workers).front();
}

Coloring enumerated_coloring(const DiskLattice& lattice, std::uint64_t index) {
  Coloring out = uniform_coloring(lattice, Color::white);
  out.index = index;
  const auto sites = lattice.in_disk_sites();
  for (std::size_t j = 0; j < sites.size(); ++j) out.black[sites[j]] = (index >> j) & 1u;
  return out;
}

double exact_event_probability(const DiskLattice& lattice, const BoundaryArc& arc) {
  const std::size_t k = lattice.in_disk_count();
  if (k > 24) throw DomainError("exact_event_probability: at most 24 in-disk sites can be enumerated");
  const std::uint64_t total = std::uint64_t{1} << k;
  std::uint64_t hits = 0;
  for (std::uint64_t index = 0; index < total; ++index) {
    if (detect_event_a(lattice, enumerated_coloring(lattice, index), arc)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

void write_coloring(std::ostream& out, const DiskLattice& lattice, const Coloring& coloring) {
  out << "# arcperc coloring delta=" << lattice.delta() << " margin=" << lattice.margin()
      << " sites=" << lattice.size() << " seed=" << coloring.seed << " index=" << coloring.index << '\n';
  for (SiteId s = 0; s < static_cast<SiteId>(lattice.size()); ++s) {
    out << lattice.q(s) << ' ' << lattice.r(s) << ' ' << static_cast<int>(coloring.black[s]) << '\n';
  }
}

Coloring read_coloring(std::istream& in, const DiskLattice& lattice) {
  Coloring out = uniform_coloring(lattice, Color::white);
  std::vector<std::uint8_t> seen(lattice.size(), 0);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    int q = 0, r = 0, c = 0;
    if (!(row >> q >> r >> c) || (c != 0 && c != 1)) {
      throw DomainError("malformed colouring line: '" + line + "'");
    }
    const SiteId s = lattice.find(q, r);
    if (s == kNoSite) throw DomainError("colouring names a site outside the lattice: '" + line + "'");
    if (!seen[s]) ++count;
    seen[s] = 1;
    out.black[s] = static_cast<std::uint8_t>(c);
  }
  if (count != lattice.size()) throw DomainError("colouring dump does not cover every lattice site");
  return out;
}

}  // namespace arcperc::percolation
