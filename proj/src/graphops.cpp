#include "mmcu/graphops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mmcu/util.hpp"

namespace mmcu {

MmcuInstance bypass_vertex(const MmcuInstance& input, VertexId v) {
  if (contains(input.terminals, v))
    throw std::invalid_argument("bypass_vertex: terminals cannot be bypassed");
  if (!input.graph.has_vertex(v))
    throw std::invalid_argument("bypass_vertex: unknown vertex");
  MmcuInstance inst = input;
  std::vector<VertexId> nb = inst.graph.neighbors(v);
  inst.graph.remove_vertex(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (inst.graph.multiplicity(nb[i], nb[j]) == 0) inst.graph.add_edge(nb[i], nb[j]);
  return inst;
}

ForcedEdgeReduction remove_forced_terminal_edges(const MmcuInstance& input) {
  ForcedEdgeReduction red;
  red.inst = input;
  for (;;) {
    EdgeId pick = -1;
    for (EdgeId e : red.inst.graph.edges()) {
      auto [a, b] = red.inst.graph.endpoints(e);
      if (contains(red.inst.terminals, a) && contains(red.inst.terminals, b) &&
          !same_class(red.inst.classes, a, b)) {
        pick = e;
        break;
      }
    }
    if (pick < 0) return red;
    if (red.inst.edge_budget == 0) {
      red.feasible = false;
      return red;
    }
    red.inst.graph.remove_edge(pick);
    red.inst.edge_budget -= 1;
    red.removed.push_back(pick);
  }
}

IdentifyResult identify_terminals(const MmcuInstance& input, VertexId u, VertexId v) {
  if (!contains(input.terminals, u) || !contains(input.terminals, v) || u == v)
    throw std::invalid_argument("identify_terminals: need two distinct terminals");
  if (!same_class(input.classes, u, v))
    throw std::invalid_argument("identify_terminals: terminals must be related");
  bool adjacent = input.graph.multiplicity(u, v) > 0;
  auto common = set_intersection(input.graph.neighbors(u), input.graph.neighbors(v));
  if (!adjacent &&
      static_cast<int>(common.size()) <= input.vertex_budget + input.edge_budget)
    throw std::invalid_argument(
        "identify_terminals: terminals neither adjacent nor sharing enough neighbours");

  IdentifyResult out{input, -1};
  out.merged = out.inst.graph.identify(u, v);
  out.inst.terminals = set_union(
      set_difference(out.inst.terminals, std::vector<VertexId>{u, v}),
      std::vector<VertexId>{out.merged});
  for (auto& cls : out.inst.classes) {
    if (contains(cls, u)) {
      cls = set_union(set_difference(cls, std::vector<VertexId>{u, v}),
                      std::vector<VertexId>{out.merged});
    }
  }
  out.inst.classes = canonical_partition(out.inst.classes);
  return out;
}

MmcuInstance delete_redundant_terminals(const MmcuInstance& input) {
  MmcuInstance inst = input;
  int keep = inst.edge_budget + 2;

  std::vector<VertexId> doomed;
  for (const auto& cls : inst.classes) {
    std::map<std::vector<VertexId>, std::vector<VertexId>> groups;
    for (VertexId t : cls) {
      auto nb = inst.graph.neighbors(t);
      if (!set_intersection(nb, inst.terminals).empty()) continue;  // needs N ⊆ V∖T
      groups[nb].push_back(t);
    }
    for (auto& [nb, members] : groups) {
      if (static_cast<int>(members.size()) <= keep) continue;
      std::sort(members.begin(), members.end());
      doomed.insert(doomed.end(), members.begin() + keep, members.end());
    }
  }
  doomed = sorted_unique(std::move(doomed));
  for (VertexId t : doomed) inst.graph.remove_vertex(t);
  inst.terminals = set_difference(inst.terminals, doomed);
  for (auto& cls : inst.classes) cls = set_difference(cls, doomed);
  inst.classes = canonical_partition(inst.classes);
  return inst;
}

MmcuInstance prune_parallel_edges(const MmcuInstance& input) {
  MmcuInstance inst = input;
  int cap = inst.edge_budget + 1;
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> pairs;
  for (EdgeId e : inst.graph.edges()) {
    auto [a, b] = inst.graph.endpoints(e);
    pairs[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  for (auto& [ends, copies] : pairs) {
    if (static_cast<int>(copies.size()) <= cap) continue;
    std::sort(copies.begin(), copies.end());
    for (std::size_t i = cap; i < copies.size(); ++i) inst.graph.remove_edge(copies[i]);
  }
  return inst;
}

}  // namespace mmcu
