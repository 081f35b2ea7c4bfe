// oracle.hpp — exhaustive ground-truth solvers. These stay deliberately
// simple: plain enumeration in lexicographic order with early exit, no
// pruning. The parallel entry points partition the enumeration across
// threads and reduce back to the sequential-first answer.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mmcu/model.hpp"
#include "mmcu/reductions.hpp"

namespace mmcu {

struct OracleLimits {
  // Refuse instances whose candidate-pair count exceeds this.
  double max_candidates = 1e8;
};

/// Thrown when an instance is too large for exhaustive enumeration.
struct OracleGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// First valid solution in lexicographic (vertices, then edges) order, or
/// nothing. Enumerates every vertex set of size <= vertex budget over the
/// non-terminals and every edge-copy set of size <= edge budget.
std::optional<MixedSolution> oracle_solve(const MmcuInstance& inst,
                                          const OracleLimits& limits = {});
std::optional<MixedSolution> oracle_solve_serial(const MmcuInstance& inst,
                                                 const OracleLimits& limits = {});

/// The complete set of minimal solutions, sorted lexicographically.
std::vector<MixedSolution> oracle_all_minimal(const MmcuInstance& inst,
                                              const OracleLimits& limits = {});

/// True iff some vertex set within the cover budget covers at least
/// cover_target edges (an edge is covered when either endpoint is chosen).
bool oracle_bpvc(const BpvcInstance& b, const OracleLimits& limits = {});

}  // namespace mmcu
