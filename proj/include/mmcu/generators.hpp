// generators.hpp — seeded random instances for tests and the CLI.
#pragma once

#include <cstdint>

#include "mmcu/model.hpp"
#include "mmcu/reductions.hpp"

namespace mmcu {

struct RandomMmcuParams {
  std::uint64_t seed = 1;
  int min_vertices = 4;
  int max_vertices = 8;
  int max_extra_edges = 6;  // on top of a random spanning tree
  int min_terminals = 1;
  int max_terminals = 4;
  int max_classes = 3;
  int max_vertex_budget = 2;
  int max_edge_budget = 2;
  bool allow_parallel = true;
};

/// Connected instance; same seed, same instance.
MmcuInstance random_mmcu(const RandomMmcuParams& p);

MultiGraph random_connected_graph(std::uint64_t seed, int n, int extra_edges,
                                  bool allow_parallel);

struct RandomBpvcParams {
  std::uint64_t seed = 1;
  int max_left = 3;
  int max_right = 3;
};

BpvcInstance random_bpvc(const RandomBpvcParams& p);

}  // namespace mmcu
