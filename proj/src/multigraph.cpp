#include "mmcu/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mmcu/util.hpp"

namespace mmcu {

MultiGraph::MultiGraph(int n) {
  vertex_live_.assign(n, 1);
  incident_.resize(n);
  live_vertices_ = n;
}

void MultiGraph::require_vertex(VertexId v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

void MultiGraph::require_edge(EdgeId e) const {
  if (!has_edge(e))
    throw std::invalid_argument("unknown edge id " + std::to_string(e));
}

VertexId MultiGraph::add_vertex() {
  vertex_live_.push_back(1);
  incident_.emplace_back();
  ++live_vertices_;
  return static_cast<VertexId>(vertex_live_.size()) - 1;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  edges_.push_back(Ends{u, v});
  EdgeId e = static_cast<EdgeId>(edges_.size()) - 1;
  incident_[u].push_back(e);
  incident_[v].push_back(e);
  ++live_edges_;
  return e;
}

void MultiGraph::remove_edge(EdgeId e) {
  require_edge(e);
  auto [a, b] = *edges_[e];
  std::erase(incident_[a], e);
  std::erase(incident_[b], e);
  edges_[e].reset();
  --live_edges_;
}

void MultiGraph::remove_vertex(VertexId v) {
  require_vertex(v);
  std::vector<EdgeId> inc = incident_[v];
  for (EdgeId e : inc) remove_edge(e);
  vertex_live_[v] = 0;
  --live_vertices_;
}

VertexId MultiGraph::identify(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw std::invalid_argument("identify: vertices must differ");
  VertexId nv = add_vertex();
  // Copies joining u and v become self-loops; drop them first.
  for (EdgeId e : copies(u, v)) remove_edge(e);
  for (VertexId old : {u, v}) {
    std::vector<EdgeId> inc = incident_[old];
    for (EdgeId e : inc) {
      auto& ends = *edges_[e];
      if (ends.a == old) ends.a = nv;
      if (ends.b == old) ends.b = nv;
      std::erase(incident_[old], e);
      incident_[nv].push_back(e);
    }
    vertex_live_[old] = 0;
    --live_vertices_;
  }
  return nv;
}

std::pair<VertexId, VertexId> MultiGraph::endpoints(EdgeId e) const {
  require_edge(e);
  return {edges_[e]->a, edges_[e]->b};
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_vertices_);
  for (VertexId v = 0; v < vertex_id_bound(); ++v)
    if (vertex_live_[v]) out.push_back(v);
  return out;
}

std::vector<EdgeId> MultiGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (EdgeId e = 0; e < edge_id_bound(); ++e)
    if (edges_[e]) out.push_back(e);
  return out;
}

const std::vector<EdgeId>& MultiGraph::incident_edges(VertexId v) const {
  require_vertex(v);
  return incident_[v];
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
  require_vertex(v);
  std::vector<VertexId> out;
  out.reserve(incident_[v].size());
  for (EdgeId e : incident_[v]) {
    auto [a, b] = *edges_[e];
    out.push_back(a == v ? b : a);
  }
  return sorted_unique(std::move(out));
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  int count = 0;
  for (EdgeId e : incident_[u]) {
    auto [a, b] = *edges_[e];
    if ((a == u && b == v) || (a == v && b == u)) ++count;
  }
  return count;
}

std::vector<EdgeId> MultiGraph::copies(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  std::vector<EdgeId> out;
  for (EdgeId e : incident_[u]) {
    auto [a, b] = *edges_[e];
    if ((a == u && b == v) || (a == v && b == u)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> neighborhood_of_set(const MultiGraph& g,
                                          const std::vector<VertexId>& s) {
  std::vector<VertexId> acc;
  for (VertexId v : s) {
    auto nb = g.neighbors(v);
    acc.insert(acc.end(), nb.begin(), nb.end());
  }
  return set_difference(sorted_unique(std::move(acc)), s);
}

MultiGraph remove_solution(const MultiGraph& g, const std::vector<VertexId>& x,
                           const std::vector<EdgeId>& f) {
  MultiGraph out = g;
  for (VertexId v : x) out.remove_vertex(v);
  for (EdgeId e : f)
    if (out.has_edge(e))
      out.remove_edge(e);
    else if (!g.has_edge(e))
      throw std::invalid_argument("remove_solution: unknown edge id " + std::to_string(e));
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<char> seen(g.vertex_id_bound(), 0);
  for (VertexId s = 0; s < g.vertex_id_bound(); ++s) {
    if (!g.has_vertex(s) || seen[s]) continue;
    std::vector<VertexId> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (EdgeId e : g.incident_edges(v)) {
        auto [a, b] = g.endpoints(e);
        VertexId w = (a == v) ? b : a;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // ordered by minimum vertex id by construction
}

MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<VertexId>& vs,
                         const std::vector<EdgeId>& es) {
  std::vector<VertexId> keep = vs;
  for (EdgeId e : es) {
    auto [a, b] = g.endpoints(e);
    keep.push_back(a);
    keep.push_back(b);
  }
  keep = sorted_unique(std::move(keep));
  for (VertexId v : keep)
    if (!g.has_vertex(v))
      throw std::invalid_argument("edge_subgraph: unknown vertex id " + std::to_string(v));

  MultiGraph out = g;
  for (EdgeId e : g.edges())
    if (!contains(es, e)) out.remove_edge(e);
  for (VertexId v : g.vertices())
    if (!contains(keep, v)) out.remove_vertex(v);
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<VertexId>& vs) {
  for (VertexId v : vs)
    if (!g.has_vertex(v))
      throw std::invalid_argument("induced_subgraph: unknown vertex id " + std::to_string(v));
  MultiGraph out = g;
  for (VertexId v : g.vertices())
    if (!contains(vs, v)) out.remove_vertex(v);
  return out;
}

ComponentIndex::ComponentIndex(const MultiGraph& g, const std::vector<VertexId>& x,
                               const std::vector<EdgeId>& f) {
  comp_.assign(g.vertex_id_bound(), -1);
  std::vector<char> deleted_v(g.vertex_id_bound(), 0);
  for (VertexId v : x) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("ComponentIndex: unknown vertex id " + std::to_string(v));
    deleted_v[v] = 1;
  }
  std::vector<char> deleted_e(g.edge_id_bound(), 0);
  for (EdgeId e : f) {
    if (!g.has_edge(e))
      throw std::invalid_argument("ComponentIndex: unknown edge id " + std::to_string(e));
    deleted_e[e] = 1;
  }
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_id_bound(); ++s) {
    if (!g.has_vertex(s) || deleted_v[s] || comp_[s] >= 0) continue;
    comp_[s] = count_;
    stack.assign(1, s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident_edges(v)) {
        if (deleted_e[e]) continue;
        auto [a, b] = g.endpoints(e);
        VertexId w = (a == v) ? b : a;
        if (deleted_v[w] || comp_[w] >= 0) continue;
        comp_[w] = count_;
        stack.push_back(w);
      }
    }
    ++count_;
  }
}

}  // namespace mmcu
