#include "mmcu/classreduce.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <queue>
#include <stdexcept>

#include "mmcu/util.hpp"

namespace mmcu {

namespace {

// Unit-capacity directed network. Every non-terminal vertex other than the
// source is split into an in/out pair so that flow = vertex-disjoint paths;
// a terminal's in-node feeds only its class aggregator, so terminals are
// usable as path endpoints only. One unit arc per aggregator enforces
// pairwise-distinct classes.
class UnitFlowNetwork {
 public:
  int add_node() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }

  void add_arc(int from, int to) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});  // residual
  }

  // Max flow from s to t, stopping once `threshold` is reached.
  int max_flow(int s, int t, int threshold) {
    int flow = 0;
    while (flow < threshold && augment(s, t)) ++flow;
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool augment(int s, int t) {
    std::vector<int> pred_arc(adj_.size(), -1);
    std::queue<int> queue;
    queue.push(s);
    pred_arc[s] = -2;
    while (!queue.empty() && pred_arc[t] == -1) {
      int v = queue.front();
      queue.pop();
      for (int ai : adj_[v]) {
        if (arcs_[ai].cap <= 0) continue;
        int w = arcs_[ai].to;
        if (pred_arc[w] != -1) continue;
        pred_arc[w] = ai;
        queue.push(w);
      }
    }
    if (pred_arc[t] == -1) return false;
    for (int v = t; v != s;) {
      int ai = pred_arc[v];
      arcs_[ai].cap -= 1;
      arcs_[ai ^ 1].cap += 1;
      v = arcs_[ai ^ 1].to;
    }
    return true;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

bool is_forced_vertex(const MmcuInstance& inst, VertexId v) {
  if (contains(inst.terminals, v))
    throw std::invalid_argument("is_forced_vertex: v must not be a terminal");
  if (!inst.graph.has_vertex(v))
    throw std::invalid_argument("is_forced_vertex: unknown vertex");
  const MultiGraph& g = inst.graph;
  int need = inst.vertex_budget + inst.edge_budget + 2;

  UnitFlowNetwork net;
  int bound = g.vertex_id_bound();
  std::vector<int> in_node(bound, -1), out_node(bound, -1);
  std::vector<char> is_term(bound, 0);
  for (VertexId t : inst.terminals) is_term[t] = 1;

  int source = net.add_node();
  for (VertexId u : g.vertices()) {
    if (u == v) continue;
    in_node[u] = net.add_node();
    if (!is_term[u]) {
      out_node[u] = net.add_node();
      net.add_arc(in_node[u], out_node[u]);
    }
  }
  int sink = net.add_node();
  for (const auto& cls : inst.classes) {
    int agg = net.add_node();
    net.add_arc(agg, sink);
    for (VertexId t : cls) net.add_arc(in_node[t], agg);
  }
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    if (a == v)
      net.add_arc(source, in_node[b]);
    else if (b == v)
      net.add_arc(source, in_node[a]);
    else {
      if (!is_term[a]) net.add_arc(out_node[a], in_node[b]);
      if (!is_term[b]) net.add_arc(out_node[b], in_node[a]);
    }
  }
  return net.max_flow(source, sink, need) >= need;
}

std::optional<VertexId> find_forced_vertex_serial(const MmcuInstance& inst) {
  for (VertexId v : set_difference(inst.graph.vertices(), inst.terminals))
    if (is_forced_vertex(inst, v)) return v;
  return std::nullopt;
}

std::optional<VertexId> find_forced_vertex(const MmcuInstance& inst) {
  std::vector<VertexId> candidates = set_difference(inst.graph.vertices(), inst.terminals);
  int n = static_cast<int>(candidates.size());
  std::atomic<VertexId> best{std::numeric_limits<VertexId>::max()};
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    VertexId v = candidates[i];
    if (v >= best.load(std::memory_order_relaxed)) continue;
    if (is_forced_vertex(inst, v)) {
      VertexId cur = best.load(std::memory_order_relaxed);
      while (v < cur && !best.compare_exchange_weak(cur, v)) {
      }
    }
  }
  VertexId win = best.load();
  if (win == std::numeric_limits<VertexId>::max()) return std::nullopt;
  return win;
}

ForcedVertexReduction delete_forced_vertices(const MmcuInstance& input) {
  ForcedVertexReduction red;
  red.inst = input;
  while (auto v = find_forced_vertex(red.inst)) {
    if (red.inst.vertex_budget == 0) {
      red.feasible = false;
      return red;
    }
    red.inst.graph.remove_vertex(*v);
    red.inst.vertex_budget -= 1;
    red.removed.push_back(*v);
  }
  return red;
}

bool component_classes_ok(const MmcuInstance& inst) {
  auto comps = connected_components(inst.graph);
  std::vector<int> comp_of(inst.graph.vertex_id_bound(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (VertexId v : comps[i]) comp_of[v] = static_cast<int>(i);

  int budget = inst.vertex_budget + inst.edge_budget;
  std::vector<std::vector<char>> class_in_comp(
      comps.size(), std::vector<char>(inst.classes.size(), 0));
  for (std::size_t c = 0; c < inst.classes.size(); ++c) {
    int home = -1;
    for (VertexId t : inst.classes[c]) {
      if (home == -1) home = comp_of[t];
      if (comp_of[t] != home) return false;  // same class split across components
      class_in_comp[comp_of[t]][c] = 1;
    }
  }
  // The class-count bound assumes at least one deletion is available; at
  // zero budget it would reject satisfiable instances, and the branching
  // phase decides those exactly anyway.
  if (budget == 0) return true;
  int limit = budget * (budget + 1);
  for (const auto& present : class_in_comp) {
    int count = 0;
    for (char x : present) count += x;
    if (count > limit) return false;
  }
  return true;
}

std::optional<MixedSolution> solve_by_components(const MmcuInstance& inst,
                                                 const SubSolver& sub) {
  auto comps = connected_components(inst.graph);
  int nc = static_cast<int>(comps.size());
  int k = inst.vertex_budget, l = inst.edge_budget;
  if (nc == 0) return MixedSolution{};

  auto make_sub = [&](int ci, int kc, int lc) {
    MmcuInstance s;
    s.graph = induced_subgraph(inst.graph, comps[ci]);
    s.terminals = set_intersection(inst.terminals, comps[ci]);
    s.classes = restrict_partition(inst.classes, comps[ci]);
    s.vertex_budget = kc;
    s.edge_budget = lc;
    return s;
  };

  // memo[ci][kc][lc]: sub-solver answer, computed on demand.
  std::vector<std::vector<std::vector<std::optional<std::optional<MixedSolution>>>>> memo(
      nc, std::vector<std::vector<std::optional<std::optional<MixedSolution>>>>(
              k + 1, std::vector<std::optional<std::optional<MixedSolution>>>(l + 1)));
  auto answer = [&](int ci, int kc, int lc) -> const std::optional<MixedSolution>& {
    auto& slot = memo[ci][kc][lc];
    if (!slot) slot = sub(make_sub(ci, kc, lc));
    return *slot;
  };

  // suffix[ci][kr][lr]: components ci.. fit into remaining budgets (kr, lr).
  std::vector<std::vector<std::vector<char>>> suffix(
      nc + 1, std::vector<std::vector<char>>(k + 1, std::vector<char>(l + 1, 0)));
  for (int kr = 0; kr <= k; ++kr)
    for (int lr = 0; lr <= l; ++lr) suffix[nc][kr][lr] = 1;
  for (int ci = nc - 1; ci >= 0; --ci)
    for (int kr = 0; kr <= k; ++kr)
      for (int lr = 0; lr <= l; ++lr) {
        char ok = 0;
        for (int kc = 0; kc <= kr && !ok; ++kc)
          for (int lc = 0; lc <= lr && !ok; ++lc)
            if (suffix[ci + 1][kr - kc][lr - lc] && answer(ci, kc, lc).has_value()) ok = 1;
        suffix[ci][kr][lr] = ok;
      }

  if (!suffix[0][k][l]) return std::nullopt;

  MixedSolution combined;
  int kr = k, lr = l;
  for (int ci = 0; ci < nc; ++ci) {
    bool placed = false;
    for (int kc = 0; kc <= kr && !placed; ++kc)
      for (int lc = 0; lc <= lr && !placed; ++lc) {
        if (!suffix[ci + 1][kr - kc][lr - lc]) continue;
        const auto& ans = answer(ci, kc, lc);
        if (!ans) continue;
        combined.vertices = set_union(combined.vertices, ans->vertices);
        combined.edges = set_union(combined.edges, ans->edges);
        kr -= kc;
        lr -= lc;
        placed = true;
      }
    if (!placed) return std::nullopt;  // unreachable given the suffix table
  }
  return combined;
}

bool decompose_components(const MmcuInstance& inst, const SubSolver& sub) {
  return solve_by_components(inst, sub).has_value();
}

}  // namespace mmcu
