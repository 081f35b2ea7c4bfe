// separations.hpp — finders for small separators that split off large or
// flower-shaped regions, plus the exact threshold formulas that drive the
// recursion. The thresholds blow past 64 bits already at tiny budgets, so
// they are exact big integers.
#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mmcu/multigraph.hpp"

namespace mmcu {

using BigInt = boost::multiprecision::cpp_int;

struct Thresholds {
  BigInt q;              // recursion size threshold
  BigInt q_prime;        // post-surgery region size bound
  BigInt t;              // component-count bound at budget k+l
  BigInt q_dprime;       // terminal bound entering the branching family
  BigInt profile_bound;  // cap on the number of profiles
};

/// Exact values from the printed formulas at budgets (k, l) with the given
/// border size (the border size only enters profile_bound).
Thresholds compute_thresholds(int k, int l, int border_size);

/// Same derived quantities but with a caller-supplied q (used when running
/// with a q override).
Thresholds compute_thresholds_with_q(const BigInt& q, int k, int l, int border_size);

/// Family "contains" parameter for the branching step: everything the small
/// surviving components can hold, vertices plus edge copies.
BigInt family_contains_bound(const Thresholds& th, int l);

struct GoodNodeSeparation {
  std::vector<VertexId> separator;  // Z, |Z| <= k, disjoint from undeletable
  std::vector<VertexId> side_a;     // component of G - Z, > q deletable vertices
  std::vector<VertexId> side_b;     // a different such component
};

struct FlowerSeparation {
  std::vector<VertexId> core;                 // Z, 1 <= |Z| <= k
  std::vector<std::vector<VertexId>> petals;  // small components attached to all of Z
};

/// Lexicographically least separator whose removal leaves two components
/// each with more than q vertices outside `undeletable`, or nothing.
/// Requires a connected graph.
std::optional<GoodNodeSeparation> find_good_node_separation(
    const MultiGraph& g, const std::vector<VertexId>& undeletable, int q, int k);
std::optional<GoodNodeSeparation> find_good_node_separation_serial(
    const MultiGraph& g, const std::vector<VertexId>& undeletable, int q, int k);

/// Flower separation: a core Z plus petal components (each small, disjoint
/// from the border, attached to exactly Z) holding together more than q
/// deletable vertices, while the rest of the graph keeps more than q too.
std::optional<FlowerSeparation> find_flower_separation(
    const MultiGraph& g, const std::vector<VertexId>& undeletable,
    const std::vector<VertexId>& border, int q, int k);

/// (2q+2)(2^k - 1) + border_size + 1.
long long high_connectivity_component_bound(long long q, int k, int border_size);

}  // namespace mmcu
