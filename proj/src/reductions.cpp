#include "mmcu/reductions.hpp"

#include <map>
#include <stdexcept>

#include "mmcu/util.hpp"

namespace mmcu {

void validate_bpvc(const BpvcInstance& b) {
  if (b.cover_budget < 0 || b.cover_target < 0)
    throw std::invalid_argument("bpvc: negative parameter");
  if (!set_intersection(b.left, b.right).empty())
    throw std::invalid_argument("bpvc: sides overlap");
  std::vector<VertexId> touched;
  for (auto [x, y] : b.edges) {
    if (!contains(b.left, x) || !contains(b.right, y))
      throw std::invalid_argument("bpvc: edge endpoints must be (left, right)");
    touched.push_back(x);
    touched.push_back(y);
  }
  touched = sorted_unique(std::move(touched));
  if (touched != set_union(b.left, b.right))
    throw std::invalid_argument("bpvc: isolated vertices are not allowed");
}

BpvcInstance drop_isolated_vertices(BpvcInstance b) {
  std::vector<VertexId> touched;
  for (auto [x, y] : b.edges) {
    touched.push_back(x);
    touched.push_back(y);
  }
  touched = sorted_unique(std::move(touched));
  b.left = set_intersection(b.left, touched);
  b.right = set_intersection(b.right, touched);
  return b;
}

void validate_mixedcut(const MixedCutInstance& mc) {
  if (mc.source == mc.sink) throw std::invalid_argument("mixedcut: source equals sink");
  if (!mc.graph.has_vertex(mc.source) || !mc.graph.has_vertex(mc.sink))
    throw std::invalid_argument("mixedcut: terminals must be live vertices");
  if (mc.vertex_budget < 0 || mc.edge_budget < 0)
    throw std::invalid_argument("mixedcut: negative budget");
}

MixedCutInstance bpvc_to_mixedcut(const BpvcInstance& input) {
  BpvcInstance b = drop_isolated_vertices(input);
  validate_bpvc(b);
  int m = static_cast<int>(b.edges.size());
  if (b.cover_target > m)
    throw std::invalid_argument("bpvc_to_mixedcut: cover target exceeds edge count");

  MixedCutInstance mc;
  std::map<VertexId, VertexId> remap;
  for (VertexId v : set_union(b.left, b.right)) remap[v] = mc.graph.add_vertex();
  mc.source = mc.graph.add_vertex();
  mc.sink = mc.graph.add_vertex();
  for (VertexId x : b.left) mc.graph.add_edge(mc.source, remap[x]);
  for (auto [x, y] : b.edges) mc.graph.add_edge(remap[x], remap[y]);
  for (VertexId y : b.right) mc.graph.add_edge(mc.sink, remap[y]);
  mc.vertex_budget = b.cover_budget;
  mc.edge_budget = m - b.cover_target;
  return mc;
}

MmcuInstance mixedcut_to_mmcu(const MixedCutInstance& mc) {
  validate_mixedcut(mc);
  MmcuInstance inst;
  inst.graph = mc.graph;
  inst.terminals = sorted_unique(std::vector<VertexId>{mc.source, mc.sink});
  inst.classes = {{std::min(mc.source, mc.sink)}, {std::max(mc.source, mc.sink)}};
  inst.vertex_budget = mc.vertex_budget;
  inst.edge_budget = mc.edge_budget;
  return inst;
}

}  // namespace mmcu
