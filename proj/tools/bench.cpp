// bench — compares the OpenMP kernels against their serial references:
// oracle enumeration, the forced-vertex scan, and the separator search.
//
// Usage: mmcu_bench [--seed N] [--repeat R]

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "mmcu/classreduce.hpp"
#include "mmcu/generators.hpp"
#include "mmcu/oracle.hpp"
#include "mmcu/separations.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(int repeat, Fn&& fn) {
  auto start = Clock::now();
  for (int i = 0; i < repeat; ++i) fn();
  auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeat;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
              name.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  int repeat = 3;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoull(argv[++i]);
    if (!std::strcmp(argv[i], "--repeat") && i + 1 < argc) repeat = std::stoi(argv[++i]);
  }
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: unavailable (serial build)\n");
#endif

  {
    mmcu::RandomMmcuParams p;
    p.seed = seed;
    p.min_vertices = p.max_vertices = 11;
    p.max_extra_edges = 8;
    p.max_terminals = 3;
    p.max_classes = 2;
    p.max_vertex_budget = 2;
    p.max_edge_budget = 3;
    mmcu::MmcuInstance inst = mmcu::random_mmcu(p);
    inst.vertex_budget = 2;
    inst.edge_budget = 3;
    std::optional<mmcu::MixedSolution> a, b;
    double s = time_ms(repeat, [&] { a = mmcu::oracle_solve_serial(inst); });
    double q = time_ms(repeat, [&] { b = mmcu::oracle_solve(inst); });
    if (a != b) {
      std::fprintf(stderr, "oracle kernels disagree\n");
      return 1;
    }
    report("oracle enumeration", s, q);
  }

  {
    mmcu::RandomMmcuParams p;
    p.seed = seed + 1;
    p.min_vertices = p.max_vertices = 40;
    p.max_extra_edges = 80;
    p.max_terminals = 4;
    p.max_classes = 4;
    mmcu::MmcuInstance inst = mmcu::random_mmcu(p);
    inst.vertex_budget = 2;
    inst.edge_budget = 2;
    std::optional<mmcu::VertexId> a, b;
    double s = time_ms(repeat, [&] { a = mmcu::find_forced_vertex_serial(inst); });
    double q = time_ms(repeat, [&] { b = mmcu::find_forced_vertex(inst); });
    if (a != b) {
      std::fprintf(stderr, "forced-vertex kernels disagree\n");
      return 1;
    }
    report("forced-vertex scan", s, q);
  }

  {
    // Dense enough that no separation exists, so both kernels scan the
    // whole candidate space instead of exiting early.
    mmcu::MultiGraph g = mmcu::random_connected_graph(seed + 2, 26, 90, false);
    std::optional<mmcu::GoodNodeSeparation> a, b;
    double s = time_ms(repeat, [&] {
      a = mmcu::find_good_node_separation_serial(g, {}, 3, 3);
    });
    double q = time_ms(repeat, [&] { b = mmcu::find_good_node_separation(g, {}, 3, 3); });
    bool same = a.has_value() == b.has_value() &&
                (!a || (a->separator == b->separator && a->side_a == b->side_a));
    if (!same) {
      std::fprintf(stderr, "separator kernels disagree\n");
      return 1;
    }
    report("good-node-separation search", s, q);
  }

  return 0;
}
