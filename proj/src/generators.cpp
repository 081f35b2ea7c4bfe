#include "mmcu/generators.hpp"

#include <algorithm>
#include <random>

#include "mmcu/util.hpp"

namespace mmcu {

MultiGraph random_connected_graph(std::uint64_t seed, int n, int extra_edges,
                                  bool allow_parallel) {
  std::mt19937_64 rng(seed);
  MultiGraph g(n);
  for (VertexId v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexId> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  std::uniform_int_distribution<VertexId> any(0, n - 1);
  for (int i = 0; i < extra_edges; ++i) {
    VertexId u = any(rng), v = any(rng);
    if (u == v) continue;
    if (!allow_parallel && g.multiplicity(u, v) > 0) continue;
    g.add_edge(u, v);
  }
  return g;
}

MmcuInstance random_mmcu(const RandomMmcuParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<int> nd(p.min_vertices, p.max_vertices);
  int n = nd(rng);
  std::uniform_int_distribution<int> extra(0, p.max_extra_edges);

  MmcuInstance inst;
  inst.graph = random_connected_graph(rng(), n, extra(rng), p.allow_parallel);

  int tmax = std::min(p.max_terminals, n);
  std::uniform_int_distribution<int> td(std::min(p.min_terminals, tmax), tmax);
  int t = td(rng);
  std::vector<VertexId> pool(n);
  for (VertexId v = 0; v < n; ++v) pool[v] = v;
  std::shuffle(pool.begin(), pool.end(), rng);
  inst.terminals.assign(pool.begin(), pool.begin() + t);
  std::sort(inst.terminals.begin(), inst.terminals.end());

  int classes = t == 0 ? 0 : std::uniform_int_distribution<int>(1, std::min(p.max_classes, t))(rng);
  inst.classes.assign(classes, {});
  for (int i = 0; i < t; ++i) {
    int c = i < classes ? i : std::uniform_int_distribution<int>(0, classes - 1)(rng);
    inst.classes[c].push_back(inst.terminals[i]);
  }
  inst.classes = canonical_partition(inst.classes);

  inst.vertex_budget = std::uniform_int_distribution<int>(0, p.max_vertex_budget)(rng);
  inst.edge_budget = std::uniform_int_distribution<int>(0, p.max_edge_budget)(rng);
  return inst;
}

BpvcInstance random_bpvc(const RandomBpvcParams& p) {
  std::mt19937_64 rng(p.seed);
  int nx = std::uniform_int_distribution<int>(1, p.max_left)(rng);
  int ny = std::uniform_int_distribution<int>(1, p.max_right)(rng);
  BpvcInstance b;
  for (VertexId x = 0; x < nx; ++x) b.left.push_back(x);
  for (VertexId y = nx; y < nx + ny; ++y) b.right.push_back(y);
  std::bernoulli_distribution keep(0.5);
  for (VertexId x = 0; x < nx; ++x)
    for (VertexId y = nx; y < nx + ny; ++y)
      if (keep(rng)) b.edges.emplace_back(x, y);
  b = drop_isolated_vertices(std::move(b));
  int m = static_cast<int>(b.edges.size());
  b.cover_budget =
      std::uniform_int_distribution<int>(0, static_cast<int>(b.left.size() + b.right.size()))(rng);
  b.cover_target = std::uniform_int_distribution<int>(0, m)(rng);
  return b;
}

}  // namespace mmcu
