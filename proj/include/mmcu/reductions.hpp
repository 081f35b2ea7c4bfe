// reductions.hpp — partial vertex cover and two-terminal mixed-cut instances,
// plus the executable reductions between them and the main problem.
#pragma once

#include <utility>
#include <vector>

#include "mmcu/model.hpp"

namespace mmcu {

struct BpvcInstance {
  std::vector<VertexId> left;   // sorted
  std::vector<VertexId> right;  // sorted, disjoint from left
  std::vector<std::pair<VertexId, VertexId>> edges;  // (left, right) pairs
  int cover_budget = 0;   // max vertices in the cover
  int cover_target = 0;   // edges that must be covered
};

void validate_bpvc(const BpvcInstance& b);

/// Drops vertices with no incident edges; preserves the yes/no answer.
BpvcInstance drop_isolated_vertices(BpvcInstance b);

struct MixedCutInstance {
  MultiGraph graph;
  VertexId source = -1;
  VertexId sink = -1;
  int vertex_budget = 0;
  int edge_budget = 0;
};

void validate_mixedcut(const MixedCutInstance& mc);

/// Adds a source adjacent to the left side and a sink adjacent to the right
/// side; vertex budget = cover budget, edge budget = m - cover target.
/// Edge ids: source edges first, then the original edges in input order,
/// then sink edges. Throws when cover_target exceeds the edge count.
MixedCutInstance bpvc_to_mixedcut(const BpvcInstance& b);

/// Frames a two-terminal mixed cut as the two-singleton-class instance.
MmcuInstance mixedcut_to_mmcu(const MixedCutInstance& mc);

}  // namespace mmcu
