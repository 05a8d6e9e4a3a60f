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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "arcperc/lattice.hpp"
#include "arcperc/montecarlo.hpp"

namespace arcperc::percolation {

enum class Color : std::uint8_t { white = 0, black = 1 };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }

/// One percolation configuration: a colour for every lattice site,
/// including the margin ring.
struct Coloring {
  std::vector<std::uint8_t> black;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  Color color(SiteId s) const { return black[s] ? Color::black : Color::white; }
  void set(SiteId s, Color c) { black[s] = c == Color::black ? 1 : 0; }
  /// Swap black and white everywhere.
  Coloring swapped() const;
};

Coloring uniform_coloring(const DiskLattice& lattice, Color c);

/// Fair coin per site from the counter stream (seed, index).
Coloring sample_coloring(const DiskLattice& lattice, std::uint64_t seed, std::uint64_t index = 0);

/// Disjoint-set forest over lattice sites (union by rank, path halving).
class ClusterSet {
 public:
  explicit ClusterSet(std::size_t n);

  SiteId find(SiteId s);
  bool unite(SiteId a, SiteId b);
  bool connected(SiteId a, SiteId b) { return find(a) == find(b); }

  /// Monochromatic clusters of the whole lattice under hexagon adjacency.
  static ClusterSet plane_clusters(const DiskLattice& lattice, const Coloring& coloring);
  /// Components of (hexagons of `color`) intersected with the closed disk.
  /// Sites outside the disk or of the other colour stay singletons.
  static ClusterSet disk_clusters(const DiskLattice& lattice, const Coloring& coloring, Color color);

 private:
  std::vector<SiteId> parent_;
  std::vector<std::uint8_t> rank_;
};

/// Per-configuration result for one boundary arc.
struct ArcEventOutcome {
  bool event_a = false;
  double x_stat = 0.0;  ///< 0, 1/2 or 1
  Color cm_color = Color::white;
  int m = 0;  ///< index of the first cluster of the nested chain not inside the open disk

  /// event_a == (X == 1) or (X == 1/2 and C_m black).
  bool identity_holds() const;
};

/// Event A for the arc: some black cluster of the disk meeting the arc
/// surrounds the origin together with the arc. A black origin hexagon
/// connected to the arc counts as surrounded.
bool detect_event_a(const DiskLattice& lattice, const Coloring& coloring, const BoundaryArc& arc);

/// Nested-cluster statistic X together with event A for the same arc.
ArcEventOutcome compute_x_statistic(const DiskLattice& lattice, const Coloring& coloring,
                                    const BoundaryArc& arc);

struct InterfaceTrace {
  int winding = 0;  ///< clockwise turns around 0 of the interface closed by the arc traversed clockwise
  bool event_a = false;  ///< winding == 1
  std::size_t edges = 0;
};

/// Explores the black/white interface from e^{i start} to e^{i (start+extent)}
/// with the outside of the disk coloured black along the arc and white
/// elsewhere, and classifies event A by the winding around the origin.
InterfaceTrace trace_interface_beta(const DiskLattice& lattice, const Coloring& coloring,
                                    const BoundaryArc& arc);

/// Reusable scratch space for repeated queries on one configuration.
class ConfigurationAnalysis {
 public:
  ConfigurationAnalysis(const DiskLattice& lattice, const Coloring& coloring);

  bool event_a(const BoundaryArc& arc);
  ArcEventOutcome x_statistic(const BoundaryArc& arc);

 private:
  struct Chain {
    int m = 0;
    SiteId seed = kNoSite;  ///< a hexagon of C_m adjacent to C_{m-1} (the origin hexagon when m == 1)
    Color color = Color::white;
  };
  const Chain& chain();

  const DiskLattice& lattice_;
  const Coloring& coloring_;
  std::vector<std::uint8_t> mark_;
  std::vector<SiteId> stack_;
  bool have_chain_ = false;
  Chain chain_;
};

struct ArcEstimate {
  double theta = 0.0;
  mc::McEstimate indicator;  ///< mean of the event indicator
  mc::McEstimate x_mean;     ///< mean of X from the same samples
  std::uint64_t identity_violations = 0;
  std::uint64_t margin_resamples = 0;
};

/// Estimates P[A] for arcs [0, theta], one lattice, shared samples.
/// Sample i uses colouring stream (seed, i).
std::vector<ArcEstimate> estimate_arc_sweep(const DiskLattice& lattice, const std::vector<double>& thetas,
                                            std::uint64_t n_samples, std::uint64_t seed,
                                            unsigned workers = 1);

ArcEstimate estimate_arc_probability(double delta, double theta, std::uint64_t n_samples,
                                     std::uint64_t seed, unsigned workers = 1);

/// Colouring number `index` of the enumeration of all colourings of the
/// in-disk sites: bit j of index colours in_disk_sites()[j]; sites outside
/// the disk are white.
Coloring enumerated_coloring(const DiskLattice& lattice, std::uint64_t index);

/// Exact P[A] over all colourings of the in-disk sites (at most 24 of them).
double exact_event_probability(const DiskLattice& lattice, const BoundaryArc& arc);

/// Text dump: a header line, then one "q r colour" line per site.
void write_coloring(std::ostream& out, const DiskLattice& lattice, const Coloring& coloring);
Coloring read_coloring(std::istream& in, const DiskLattice& lattice);

}  // namespace arcperc::percolation
