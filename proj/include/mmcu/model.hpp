// model.hpp — problem instances, mixed solutions, bordered instances, profiles.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "mmcu/multigraph.hpp"

namespace mmcu {

// A partition is a list of disjoint sorted classes; canonical form below.
using Partition = std::vector<std::vector<VertexId>>;

Partition canonical_partition(Partition p);
bool same_class(const Partition& p, VertexId u, VertexId v);
std::vector<VertexId> partition_ground_set(const Partition& p);

/// Restriction of p to `keep`: intersect every class, drop empties.
Partition restrict_partition(const Partition& p, const std::vector<VertexId>& keep);

/// True iff every class of `fine` is contained in one class of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

struct MmcuInstance {
  MultiGraph graph;
  std::vector<VertexId> terminals;  // sorted; never deletable
  Partition classes;                // equivalence relation on terminals
  int vertex_budget = 0;            // max deletable vertices
  int edge_budget = 0;              // max deletable edge copies
};

/// Throws when the terminals are not live vertices or the classes do not
/// partition exactly the terminal set.
void validate_instance(const MmcuInstance& inst);

struct MixedSolution {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted
  auto operator<=>(const MixedSolution&) const = default;
};

inline int solution_size(const MixedSolution& s) {
  return static_cast<int>(s.vertices.size() + s.edges.size());
}

/// True iff `small` deletes a subset of what `big` deletes.
bool solution_subset(const MixedSolution& small, const MixedSolution& big);

enum class SolutionDefect {
  none,
  budget_exceeded,
  deletes_terminal,
  connectivity_mismatch,
};

struct SolutionCheck {
  bool ok = false;
  SolutionDefect defect = SolutionDefect::none;
};

SolutionCheck check_solution(const MmcuInstance& inst, const MixedSolution& sol);
bool is_solution(const MmcuInstance& inst, const MixedSolution& sol);

/// Exact minimality when the solution has at most `exact_subset_limit`
/// elements (every proper sub-pair is tested); above the limit only
/// single-element removals are tested. Requires a solution as input.
bool is_minimal_solution(const MmcuInstance& inst, const MixedSolution& sol,
                         int exact_subset_limit = 8);

/// Shrinks a solution to a minimal one. Deterministic: removal candidates are
/// tried in ascending id order, edges before vertices, restarting after each
/// successful removal; a final exact subset pass runs at small sizes.
MixedSolution minimalize(const MmcuInstance& inst, MixedSolution sol,
                         int exact_subset_limit = 8);

struct BorderInstance {
  MmcuInstance base;
  std::vector<VertexId> border;  // sorted, disjoint from terminals
};

void validate_border_instance(const BorderInstance& ib);

/// One behaviour guess for a bordered instance: which border vertices are
/// deleted, how the outside connects the rest, the required global
/// connectivity pattern, and budget caps.
struct Profile {
  std::vector<VertexId> deleted_border;  // subset of border
  Partition border_links;                // on border minus deleted_border
  Partition target;                      // on terminals + live border
  int vertex_cap = 0;
  int edge_cap = 0;
  auto operator<=>(const Profile&) const = default;
};

using BorderOutput = std::map<Profile, std::optional<MixedSolution>>;

/// All profiles of `ib` in a fixed deterministic order, each canonicalized.
std::vector<Profile> enumerate_profiles(const BorderInstance& ib);

/// Solution check against a profile: budgets capped, deleted border hit
/// exactly, and the component pattern (with one helper edge per related
/// border pair from border_links) must match `target`.
bool is_border_solution(const BorderInstance& ib, const Profile& p,
                        const MixedSolution& sol);

MixedSolution minimalize_border(const BorderInstance& ib, const Profile& p,
                                MixedSolution sol, int exact_subset_limit = 8);

}  // namespace mmcu
