#pragma once

#include "mapcensus/canon.hpp"

namespace mapcensus {

/// Singular points of a Morse flow on the disk, transversal to the boundary,
/// whose distinguished graph is a given plane graph: sources sit at the
/// vertices, one saddle on each edge, one sink in each bounded face.
struct FlowSummary {
  int sources = 0;
  int saddles = 0;
  int sinks = 0;
  bool euler_check = false;  // sources - saddles + sinks == 1

  friend bool operator==(const FlowSummary&, const FlowSummary&) = default;
};

FlowSummary flow_summary(const PlaneGraph& plane);

/// Number of topologically distinct flows with `saddles` saddles, i.e. the
/// size of the plane catalog with that many edges.
int flow_structure_count(int saddles, EquivalenceMode mode, int jobs = 0);

}  // namespace mapcensus
