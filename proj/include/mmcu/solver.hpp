// solver.hpp — the two-phase bordered solver and the full pipeline entry
// point: forced-vertex preprocessing, per-component budget split, recursive
// shrinking along small separators, and the branching family phase on
// highly connected remainders.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mmcu/model.hpp"
#include "mmcu/separations.hpp"

namespace mmcu {

enum class SolveMode { sound, heuristic };

struct SolverConfig {
  SolveMode mode = SolveMode::sound;
  // Replaces the theoretical recursion threshold q. Required in heuristic
  // mode: the formula value is astronomically large, so separations never
  // fire with it and the recursive machinery stays cold.
  std::optional<int> q_override;
  // Verify every emitted solution; failures throw AuditError.
  bool audit = false;
  // On a "no" answer, cross-check with the exhaustive oracle when the
  // instance is under the oracle's size guard.
  bool crosscheck_no_with_oracle = false;
};

struct AuditError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A separator and the region behind it selected for recursion.
struct RecursionSplit {
  std::vector<VertexId> separator;  // Z*, disjoint from terminals, <= k+l
  std::vector<VertexId> region;     // V*, union of components of G - Z*
};

/// A subset of vertices and edge copies (the branching universe is mixed).
struct MixedSubset {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

/// Solves the full problem. The returned solution is minimal and verified.
std::optional<MixedSolution> solve_mmcu(const MmcuInstance& inst,
                                        const SolverConfig& cfg);

/// Bordered solver: one minimal solution or nothing per profile of `ib`.
BorderOutput solve_border(const BorderInstance& ib, const SolverConfig& cfg);

/// Region instance for recursion: W = region + its neighbourhood, terminals
/// and relation restricted, budgets unchanged, border extended by the
/// separator. Validates that the result is a proper bordered instance.
BorderInstance build_sub_instance(const BorderInstance& ib, const RecursionSplit& split);

/// The sub-instance border plus every vertex some returned solution deletes
/// or touches through a deleted edge copy.
std::vector<VertexId> affected_union(const BorderInstance& sub, const BorderOutput& out);

/// Branching phase for one profile on an instance where neither separation
/// exists: reduces terminals, builds the covering family over vertices and
/// edges outside the terminals, and scans candidate regions per member.
std::optional<MixedSolution> high_connectivity_phase(const BorderInstance& ib,
                                                     const Profile& p,
                                                     const SolverConfig& cfg);

/// S interrogates the solution: S avoids everything the solution deletes
/// and fully contains every surviving component with at most q_eff vertices
/// outside the terminals (vertices and edge copies alike).
bool interrogates(const MultiGraph& g, const std::vector<VertexId>& terminals,
                  const MixedSolution& sol, const MixedSubset& s, long long q_eff);

/// Edge copies with exactly one endpoint in `region` and no endpoint in X.
std::vector<EdgeId> boundary_edges(const MultiGraph& g, const std::vector<VertexId>& x,
                                   const std::vector<VertexId>& region);

}  // namespace mmcu
