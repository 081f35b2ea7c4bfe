// classreduce.hpp — budget-forced vertex detection via unit-capacity flow,
// the resulting deletion loop, terminal sanity checks, and the
// per-component budget split.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mmcu/model.hpp"

namespace mmcu {

/// True iff v (a non-terminal) has vertex_budget + edge_budget + 2 paths to
/// terminals of pairwise distinct classes, vertex-disjoint except at v.
/// Such a vertex belongs to every solution. Computed as a max-flow of
/// k+l+2 in a split-vertex unit-capacity network.
bool is_forced_vertex(const MmcuInstance& inst, VertexId v);

/// Least forced vertex, or nothing. The parallel entry scans candidates
/// across threads with a min-id reduce.
std::optional<VertexId> find_forced_vertex(const MmcuInstance& inst);
std::optional<VertexId> find_forced_vertex_serial(const MmcuInstance& inst);

struct ForcedVertexReduction {
  bool feasible = true;            // false: the budget cannot pay for the forced set
  MmcuInstance inst;               // fixed point (when feasible)
  std::vector<VertexId> removed;   // deleted vertices, in deletion order
};

/// Deletes forced vertices one at a time (least id first), decrementing the
/// vertex budget, until none is left or the budget runs out.
ForcedVertexReduction delete_forced_vertices(const MmcuInstance& inst);

/// False when two same-class terminals sit in different components, or some
/// component holds terminals of more than (k+l)(k+l+1) classes. Both
/// conditions certify infeasibility after delete_forced_vertices.
bool component_classes_ok(const MmcuInstance& inst);

using SubSolver = std::function<std::optional<MixedSolution>(const MmcuInstance&)>;

/// Splits the instance along connected components, asks the sub-solver for
/// every budget split (k', l') per component, and combines answers by a
/// budget-sum table. Returns a combined witness when every component fits.
std::optional<MixedSolution> solve_by_components(const MmcuInstance& inst,
                                                 const SubSolver& sub);

/// Feasibility-only wrapper.
bool decompose_components(const MmcuInstance& inst, const SubSolver& sub);

}  // namespace mmcu
