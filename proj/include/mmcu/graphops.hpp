// graphops.hpp — solution-preserving surgeries on instances: bypassing
// irrelevant vertices, forced edge deletion between separated terminals,
// merging related terminals, twin-terminal pruning, and parallel-copy caps.
#pragma once

#include <vector>

#include "mmcu/model.hpp"

namespace mmcu {

/// Deletes non-terminal v and completes its former neighbourhood: one simple
/// edge per neighbour pair that has no copy yet.
MmcuInstance bypass_vertex(const MmcuInstance& inst, VertexId v);

struct ForcedEdgeReduction {
  bool feasible = true;          // false: edge budget exhausted mid-rule
  MmcuInstance inst;
  std::vector<EdgeId> removed;   // forced copies, in deletion order
};

/// While an edge joins terminals of different classes, delete one copy
/// (least id) and decrement the edge budget. Every such copy belongs to
/// every solution.
ForcedEdgeReduction remove_forced_terminal_edges(const MmcuInstance& inst);

struct IdentifyResult {
  MmcuInstance inst;
  VertexId merged;  // the fresh terminal standing for u and v
};

/// Merges same-class terminals u, v into a fresh terminal. Requires them
/// adjacent or sharing more than k+l common neighbours; either way no
/// minimal solution separates them. Edge copies keep their ids; u-v copies
/// disappear.
IdentifyResult identify_terminals(const MmcuInstance& inst, VertexId u, VertexId v);

/// For every group of more than edge_budget+2 same-class terminals with one
/// identical non-terminal neighbourhood, keeps the edge_budget+2 lowest ids
/// and deletes the rest (and their relation entries).
MmcuInstance delete_redundant_terminals(const MmcuInstance& inst);

/// Caps every endpoint pair at edge_budget+1 copies (lowest ids kept).
MmcuInstance prune_parallel_edges(const MmcuInstance& inst);

}  // namespace mmcu
