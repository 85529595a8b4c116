#include "mapcensus/morse.hpp"

#include <cassert>

#include "mapcensus/enumerate.hpp"

namespace mapcensus {

FlowSummary flow_summary(const PlaneGraph& plane) {
  const auto s = summary(plane.map());
  FlowSummary flow{.sources = s.vertices, .saddles = s.edges, .sinks = s.faces - 1};
  flow.euler_check = flow.sources - flow.saddles + flow.sinks == 1;
  assert(flow.euler_check && "a connected spherical map always yields a disk flow");
  return flow;
}

int flow_structure_count(int saddles, EquivalenceMode mode, int jobs) {
  return static_cast<int>(enumerate_plane(saddles, mode, jobs).entries.size());
}

}  // namespace mapcensus
