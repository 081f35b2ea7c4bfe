// acceptance — end-to-end checks of the whole pipeline against exhaustive
// ground truth. Each criterion prints one PASS/FAIL line; the exit status is
// the number of failed criteria. Run a single criterion with
// `acceptance_tests --criterion N`.

#include <atomic>
#include <cmath>
#include <cstring>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mmcu/classreduce.hpp"
#include "mmcu/generators.hpp"
#include "mmcu/graphops.hpp"
#include "mmcu/io.hpp"
#include "mmcu/oracle.hpp"
#include "mmcu/setfamily.hpp"
#include "mmcu/solver.hpp"
#include "mmcu/util.hpp"
#include "support/test_oracles.hpp"

using namespace mmcu;

namespace {

struct Tally {
  std::atomic<long long> checked{0};
  std::atomic<long long> failed{0};
  std::string note;

  void count(bool ok) {
    checked.fetch_add(1, std::memory_order_relaxed);
    if (!ok) failed.fetch_add(1, std::memory_order_relaxed);
  }
  bool pass() const { return failed.load() == 0 && checked.load() > 0; }
};

RandomMmcuParams acceptance_params(std::uint64_t seed) {
  RandomMmcuParams p;
  p.seed = seed;
  p.min_vertices = 4;
  p.max_vertices = 8;
  p.max_extra_edges = 7;  // tree edges + 7 <= 14
  p.min_terminals = 1;
  p.max_terminals = 4;
  p.max_classes = 3;
  p.max_vertex_budget = 2;
  p.max_edge_budget = 2;
  return p;
}

// ---- criterion 1: reduction equivalence, exhaustive over small bipartite ----

bool criterion_1(Tally& tally) {
  std::vector<std::tuple<int, int, int>> grid;  // (nx, ny, edge mask)
  for (int nx = 1; nx <= 3; ++nx)
    for (int ny = 1; ny <= 3; ++ny)
      for (int mask = 0; mask < (1 << (nx * ny)); ++mask) grid.emplace_back(nx, ny, mask);

#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    auto [nx, ny, mask] = grid[gi];
    BpvcInstance raw;
    for (VertexId x = 0; x < nx; ++x) raw.left.push_back(x);
    for (VertexId y = nx; y < nx + ny; ++y) raw.right.push_back(y);
    int bit = 0;
    for (VertexId x = 0; x < nx; ++x)
      for (VertexId y = nx; y < nx + ny; ++y, ++bit)
        if (mask >> bit & 1) raw.edges.emplace_back(x, y);
    BpvcInstance b = drop_isolated_vertices(raw);
    int m = static_cast<int>(b.edges.size());
    for (int p = 0; p <= nx + ny; ++p)
      for (int q = 0; q <= m; ++q) {
        b.cover_budget = p;
        b.cover_target = q;
        bool direct = oracle_bpvc(b);
        bool via_cut =
            oracle_solve_serial(mixedcut_to_mmcu(bpvc_to_mixedcut(b))).has_value();
        if (direct != via_cut) {
#pragma omp critical
          if (tally.note.empty()) {
            std::ostringstream os;
            os << "first mismatch: left=" << nx << " right=" << ny << " mask=" << mask
               << " p=" << p << " q=" << q << " cover=" << direct
               << " cut=" << via_cut
               << " (the literal reduction lets the edge budget pay for "
                  "terminal-side edges)";
            tally.note = os.str();
          }
        }
        tally.count(direct == via_cut);
      }
  }
  return tally.pass();
}

// ---- criterion 2: solver vs oracle on 500 random instances ----

bool criterion_2(Tally& tally) {
  SolverConfig cfg;
  cfg.mode = SolveMode::heuristic;
  cfg.q_override = 3;
  cfg.audit = true;

  std::atomic<int> yes{0};
  for (int i = 0; i < 500; ++i) {
    MmcuInstance inst = random_mmcu(acceptance_params(1000 + i));
    bool ok = false;
    try {
      auto got = solve_mmcu(inst, cfg);
      auto expected = oracle_solve(inst);
      ok = got.has_value() == expected.has_value();
      if (got) {
        ok = ok && is_solution(inst, *got);
        ++yes;
      }
    } catch (const std::exception& e) {
#pragma omp critical
      std::cerr << "  instance seed " << 1000 + i << ": " << e.what() << '\n';
      ok = false;
    }
    tally.count(ok);
  }
  tally.note = "yes answers: " + std::to_string(yes.load());
  return tally.pass();
}

// ---- criterion 3: preprocessing safety ----

bool step1_safety(Tally& tally) {
  int fired = 0;
  for (std::uint64_t seed = 0; fired < 300 && seed < 60000; ++seed) {
    RandomMmcuParams p = acceptance_params(seed * 2 + 1);
    p.max_vertices = 7;
    p.max_terminals = 5;
    p.max_classes = 4;
    p.max_vertex_budget = 1;
    p.max_edge_budget = 1;
    MmcuInstance inst = random_mmcu(p);
    auto red = delete_forced_vertices(inst);
    if (red.feasible && red.removed.empty()) continue;
    ++fired;
    bool before = oracle_solve(inst).has_value();
    if (!red.feasible)
      tally.count(!before);
    else
      tally.count(before == oracle_solve(red.inst).has_value());
  }
  return fired >= 300;
}

bool step2_safety(Tally& tally) {
  int fired = 0;
  for (std::uint64_t seed = 0; fired < 300 && seed < 60000; ++seed) {
    RandomMmcuParams p = acceptance_params(seed * 2);
    p.max_vertices = 7;
    p.max_terminals = 4;
    p.max_classes = 2;
    MmcuInstance inst = random_mmcu(p);
    std::mt19937_64 rng(seed);
    for (EdgeId e : inst.graph.edges())
      if (rng() % 3 == 0) inst.graph.remove_edge(e);  // often disconnects
    auto red = delete_forced_vertices(inst);
    if (!red.feasible) continue;
    if (component_classes_ok(red.inst)) continue;
    ++fired;
    tally.count(!oracle_solve(red.inst).has_value());
  }
  return fired >= 300;
}

bool force_edge_safety(Tally& tally) {
  int fired = 0, small_checked = 0;
  for (std::uint64_t seed = 0; fired < 300 && seed < 60000; ++seed) {
    RandomMmcuParams p = acceptance_params(seed * 3 + 5);
    p.max_vertices = 6;
    p.max_terminals = 4;
    p.max_classes = 3;
    MmcuInstance inst = random_mmcu(p);
    auto red = remove_forced_terminal_edges(inst);
    if (red.feasible && red.removed.empty()) continue;
    ++fired;
    bool before = oracle_solve(inst).has_value();
    if (!red.feasible)
      tally.count(!before);
    else
      tally.count(before == oracle_solve(red.inst).has_value());
  }
  (void)small_checked;
  return fired >= 300;
}

bool identify_safety(Tally& tally) {
  int fired = 0;
  for (std::uint64_t seed = 0; fired < 300 && seed < 120000; ++seed) {
    RandomMmcuParams p = acceptance_params(seed * 5 + 3);
    p.max_vertices = 7;
    p.max_terminals = 4;
    p.max_classes = 1;
    p.max_vertex_budget = 1;
    p.max_edge_budget = 1;
    MmcuInstance inst = random_mmcu(p);
    bool applied = false;
    for (std::size_t i = 0; i < inst.terminals.size() && !applied; ++i)
      for (std::size_t j = i + 1; j < inst.terminals.size() && !applied; ++j) {
        VertexId u = inst.terminals[i], v = inst.terminals[j];
        if (!same_class(inst.classes, u, v)) continue;
        bool adjacent = inst.graph.multiplicity(u, v) > 0;
        auto common =
            set_intersection(inst.graph.neighbors(u), inst.graph.neighbors(v));
        if (!adjacent && static_cast<int>(common.size()) <=
                             inst.vertex_budget + inst.edge_budget)
          continue;
        applied = true;
        ++fired;
        auto res = identify_terminals(inst, u, v);
        // Minimal solution sets are claimed equal; ids survive the merge.
        tally.count(oracle_all_minimal(inst) == oracle_all_minimal(res.inst));
      }
  }
  return fired >= 300;
}

bool twins_safety(Tally& tally) {
  int fired = 0;
  for (std::uint64_t seed = 0; fired < 300 && seed < 60000; ++seed) {
    std::mt19937_64 rng(seed ^ 0x5eed);
    int l = static_cast<int>(rng() % 2);
    int hubs = 1 + static_cast<int>(rng() % 2);
    int twins = l + 3 + static_cast<int>(rng() % 2);
    int extras = static_cast<int>(rng() % 2);
    MmcuInstance inst;
    inst.graph = MultiGraph(hubs + twins + extras);
    std::vector<VertexId> twin_ids;
    for (int t = 0; t < twins; ++t) {
      VertexId id = hubs + t;
      twin_ids.push_back(id);
      for (VertexId h = 0; h < hubs; ++h) inst.graph.add_edge(h, id);
    }
    for (int x = 0; x < extras; ++x) {
      VertexId id = hubs + twins + x;
      inst.graph.add_edge(id, static_cast<VertexId>(rng() % hubs));
    }
    inst.terminals = twin_ids;
    inst.classes = {twin_ids};
    inst.vertex_budget = 1 + static_cast<int>(rng() % 2);
    inst.edge_budget = l;
    MmcuInstance reduced = delete_redundant_terminals(inst);
    if (reduced.terminals.size() == inst.terminals.size()) continue;
    ++fired;
    tally.count(oracle_all_minimal(inst) == oracle_all_minimal(reduced) &&
                oracle_solve(inst).has_value() == oracle_solve(reduced).has_value());
  }
  return fired >= 300;
}

bool prune_safety(Tally& tally) {
  int fired = 0;
  for (std::uint64_t seed = 0; fired < 300 && seed < 60000; ++seed) {
    RandomMmcuParams p = acceptance_params(seed * 7 + 2);
    p.max_vertices = 5;
    p.max_extra_edges = 6;
    p.max_edge_budget = 1;
    p.max_vertex_budget = 1;
    MmcuInstance inst = random_mmcu(p);
    std::mt19937_64 rng(seed);
    // plant extra copies of one random edge
    auto edges = inst.graph.edges();
    if (!edges.empty()) {
      auto [a, b] = inst.graph.endpoints(edges[rng() % edges.size()]);
      int copies = 1 + static_cast<int>(rng() % 3);
      for (int c = 0; c < copies; ++c) inst.graph.add_edge(a, b);
    }
    MmcuInstance pruned = prune_parallel_edges(inst);
    if (pruned.graph.num_edges() == inst.graph.num_edges()) continue;
    ++fired;
    tally.count(oracle_solve(inst).has_value() == oracle_solve(pruned).has_value() &&
                oracle_all_minimal(inst) == oracle_all_minimal(pruned));
  }
  return fired >= 300;
}

bool criterion_3(Tally& tally) {
  struct Rule {
    const char* name;
    bool (*run)(Tally&);
  };
  const Rule rules[] = {
      {"step1", step1_safety},       {"step2", step2_safety},
      {"force-edge", force_edge_safety}, {"identify", identify_safety},
      {"twins", twins_safety},       {"prune", prune_safety},
  };
  bool all_fired = true;
  std::ostringstream note;
  for (const Rule& rule : rules) {
    long long before = tally.checked.load();
    bool fired = rule.run(tally);
    note << rule.name << ":" << (tally.checked.load() - before) << ' ';
    if (!fired) {
      note << "(insufficient firing instances) ";
      all_fired = false;
    }
  }
  tally.note = note.str();
  return tally.pass() && all_fired;
}

// ---- criterion 4: set-family covering, exhaustive ----

bool criterion_4(Tally& tally) {
  std::vector<std::tuple<int, int, int>> grid;
  for (int n = 0; n <= 12; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) grid.emplace_back(n, a, b);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto [n, a, b] = grid[i];
    SetFamily f = build_family(n, a, b);
    tally.count(verify_family(f, a, b, 5e8));
  }
  return tally.pass();
}

// ---- criterion 5: separation finders vs exhaustive enumeration ----

bool criterion_5(Tally& tally) {
#pragma omp parallel for schedule(dynamic, 1)
  for (int gi = 0; gi < 200; ++gi) {
    std::uint64_t seed = 5000 + gi;
    std::mt19937_64 rng(seed);
    int n = 4 + static_cast<int>(rng() % 5);
    MultiGraph g = random_connected_graph(rng(), n, static_cast<int>(rng() % 8), false);
    std::vector<VertexId> undeletable, border;
    for (VertexId v : g.vertices()) {
      if (rng() % 5 == 0) undeletable.push_back(v);
      else if (rng() % 6 == 0) border.push_back(v);
    }
    for (int q = 1; q <= 3; ++q)
      for (int k = 1; k <= 2; ++k) {
        tally.count(find_good_node_separation(g, undeletable, q, k).has_value() ==
                    testing::good_separation_exists(g, undeletable, q, k));
        tally.count(find_flower_separation(g, undeletable, border, q, k).has_value() ==
                    testing::flower_separation_exists(g, undeletable, border, q, k));
      }
  }
  return tally.pass();
}

// ---- criterion 6: component bound where no separation exists ----

bool criterion_6(Tally& tally) {
  int accepted = 0;
  for (std::uint64_t seed = 0; accepted < 50 && seed < 20000; ++seed) {
    std::mt19937_64 rng(seed * 11 + 3);
    int n = 5 + static_cast<int>(rng() % 5);
    MultiGraph g = random_connected_graph(rng(), n, n + static_cast<int>(rng() % 4), false);
    const int q = 2, k = 2;
    if (find_good_node_separation(g, {}, q, k)) continue;
    if (find_flower_separation(g, {}, {}, q, k)) continue;
    ++accepted;
    long long bound = high_connectivity_component_bound(q, k, 0);  // 19
    std::vector<VertexId> all = g.vertices();
    for_each_subset_lex(static_cast<int>(all.size()), k, [&](const std::vector<int>& zi) {
      std::vector<VertexId> z;
      for (int i : zi) z.push_back(all[i]);
      auto comps = testing::components_without(g, z);
      bool comps_ok = static_cast<long long>(comps.size()) <= bound;
      int big = 0;
      for (const auto& c : comps)
        if (static_cast<int>(c.size()) > q) ++big;
      tally.count(comps_ok && big <= 1);
      return true;
    });
  }
  tally.note = "graphs without separations: " + std::to_string(accepted);
  return tally.pass() && accepted >= 50;
}

// ---- criterion 7: threshold formulas ----

bool criterion_7(Tally& tally) {
  tally.count(compute_thresholds(0, 0, 0).q == 0);
  tally.count(compute_thresholds(1, 0, 2).q == 163);
  tally.count(compute_thresholds(1, 0, 2).t == 331);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) {
      MmcuInstance inst;
      inst.graph = MultiGraph(2);
      inst.graph.add_edge(0, 1);
      inst.terminals = {0};
      inst.classes = {{0}};
      inst.vertex_budget = k;
      inst.edge_budget = l;
      BorderInstance ib{inst, {}};
      tally.count(enumerate_profiles(ib).size() ==
                  static_cast<std::size_t>((k + 1) * (l + 1)));
      tally.count(compute_thresholds(k, l, 0).profile_bound == (k + 1) * (l + 1));
    }
  return tally.pass();
}

// ---- criterion 8: flow check vs exhaustive path systems ----

bool criterion_8(Tally& tally) {
#pragma omp parallel for schedule(dynamic, 1)
  for (int gi = 0; gi < 200; ++gi) {
    RandomMmcuParams p = acceptance_params(8000 + gi);
    p.max_vertices = 7;
    p.max_terminals = 5;
    p.max_classes = 4;
    MmcuInstance inst = random_mmcu(p);
    int needed = inst.vertex_budget + inst.edge_budget + 2;
    for (VertexId v : set_difference(inst.graph.vertices(), inst.terminals))
      tally.count(is_forced_vertex(inst, v) ==
                  testing::path_system_exists(inst, v, needed));
  }
  return tally.pass();
}

// ---- criterion 9: minimality of emitted solutions ----

bool criterion_9(Tally& tally) {
  SolverConfig cfg;
  cfg.mode = SolveMode::heuristic;
  cfg.q_override = 3;
  cfg.audit = true;
  int yes = 0;
  for (int i = 0; i < 200; ++i) {
    MmcuInstance inst = random_mmcu(acceptance_params(9000 + i));
    std::optional<MixedSolution> got;
    try {
      got = solve_mmcu(inst, cfg);
    } catch (const std::exception&) {
      tally.count(false);
      continue;
    }
    if (!got) continue;
    ++yes;
    bool incidence_ok = true;
    for (EdgeId e : got->edges) {
      auto [a, b] = inst.graph.endpoints(e);
      if (contains(got->vertices, a) || contains(got->vertices, b)) incidence_ok = false;
    }
    tally.count(incidence_ok);
    if (solution_size(*got) <= 8) tally.count(is_minimal_solution(inst, *got, 8));
  }
  tally.note = "yes answers: " + std::to_string(yes);
  return tally.pass() && yes > 0;
}

struct Criterion {
  int id;
  const char* summary;
  bool (*run)(Tally&);
};

const Criterion kCriteria[] = {
    {1, "reduction equivalence on all small bipartite instances", criterion_1},
    {2, "solver matches the oracle on 500 random instances", criterion_2},
    {3, "preprocessing rules preserve feasibility and minimal sets", criterion_3},
    {4, "covering family verified exhaustively for n<=12, a,b<=3", criterion_4},
    {5, "separation finders match exhaustive enumeration", criterion_5},
    {6, "component bound holds when no separation exists", criterion_6},
    {7, "threshold formulas reproduce pinned values", criterion_7},
    {8, "flow check equals exhaustive disjoint-path search", criterion_8},
    {9, "emitted solutions are minimal and incidence-clean", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Tally tally;
    bool ok = false;
    try {
      ok = c.run(tally);
    } catch (const std::exception& e) {
      tally.note += std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.summary << " (" << tally.checked.load() << " checks, "
              << tally.failed.load() << " failed";
    if (!tally.note.empty()) std::cout << "; " << tally.note;
    std::cout << ")\n";
    if (!ok) ++failures;
  }
  return failures;
}
