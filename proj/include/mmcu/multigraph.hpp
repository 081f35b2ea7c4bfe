// multigraph.hpp — undirected multigraph with stable vertex and edge-copy ids.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mmcu {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected labeled multigraph. Ids are dense non-negative integers handed
/// out in creation order and never reused within one graph lifetime, so a
/// deleted-edge hole stays a hole. Parallel copies are distinct edge ids with
/// identical endpoint pairs; self-loops are rejected at construction.
///
/// All structural edits produce a logically new value (callers copy freely);
/// a const MultiGraph is safe to share across parallel workers.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);  // also removes all incident edge copies
  void remove_edge(EdgeId e);

  /// Replaces vertices u and v by a fresh vertex whose id is returned. Edge
  /// copies incident to u or v are re-targeted to the new vertex keeping
  /// their ids; copies joining u and v would become self-loops and are
  /// dropped instead.
  VertexId identify(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const {
    return v >= 0 && v < static_cast<VertexId>(vertex_live_.size()) && vertex_live_[v];
  }
  bool has_edge(EdgeId e) const {
    return e >= 0 && e < static_cast<EdgeId>(edges_.size()) && edges_[e].has_value();
  }
  int num_vertices() const { return live_vertices_; }
  int num_edges() const { return live_edges_; }

  // One past the largest id ever created; live ids are a subset of [0, bound).
  VertexId vertex_id_bound() const { return static_cast<VertexId>(vertex_live_.size()); }
  EdgeId edge_id_bound() const { return static_cast<EdgeId>(edges_.size()); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;

  std::vector<VertexId> vertices() const;  // sorted live ids
  std::vector<EdgeId> edges() const;       // sorted live ids

  /// Incident edge copies of v; order is the creation/re-target order.
  const std::vector<EdgeId>& incident_edges(VertexId v) const;

  /// Open neighbourhood N(v): sorted, deduplicated across parallel copies.
  std::vector<VertexId> neighbors(VertexId v) const;

  int multiplicity(VertexId u, VertexId v) const;
  std::vector<EdgeId> copies(VertexId u, VertexId v) const;  // sorted

 private:
  struct Ends {
    VertexId a, b;
  };
  std::vector<std::optional<Ends>> edges_;
  std::vector<char> vertex_live_;
  std::vector<std::vector<EdgeId>> incident_;
  int live_vertices_ = 0;
  int live_edges_ = 0;

  void require_vertex(VertexId v) const;
  void require_edge(EdgeId e) const;
};

/// N_G(S): union of open neighbourhoods of S minus S itself.
std::vector<VertexId> neighborhood_of_set(const MultiGraph& g,
                                          const std::vector<VertexId>& s);

/// G - (X, F): the graph with vertices X deleted (with all incident copies)
/// and edge copies F deleted. Ids are preserved.
MultiGraph remove_solution(const MultiGraph& g, const std::vector<VertexId>& x,
                           const std::vector<EdgeId>& f);

/// Maximal connected vertex sets, each sorted, ordered by minimum vertex id.
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);

/// G(Z) for a mixed set Z of vertex ids and edge ids: the subgraph whose
/// edges are exactly `es` and whose vertices are `vs` plus all endpoints of
/// `es`. Ids are preserved.
MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<VertexId>& vs,
                         const std::vector<EdgeId>& es);

/// G[S]: induced subgraph on `vs` keeping ids.
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<VertexId>& vs);

/// Connected-component index of g - (X, F), computed without copying g.
/// Deleted vertices belong to no component.
class ComponentIndex {
 public:
  ComponentIndex(const MultiGraph& g, const std::vector<VertexId>& x,
                 const std::vector<EdgeId>& f);

  bool alive(VertexId v) const { return comp_[v] >= 0; }
  int component_of(VertexId v) const { return comp_[v]; }
  bool same_component(VertexId u, VertexId v) const {
    return comp_[u] >= 0 && comp_[u] == comp_[v];
  }
  int num_components() const { return count_; }

 private:
  std::vector<int> comp_;
  int count_ = 0;
};

}  // namespace mmcu
