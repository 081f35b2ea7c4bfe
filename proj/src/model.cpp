#include "mmcu/model.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mmcu/util.hpp"

namespace mmcu {

Partition canonical_partition(Partition p) {
  for (auto& cls : p) std::sort(cls.begin(), cls.end());
  std::erase_if(p, [](const auto& cls) { return cls.empty(); });
  std::sort(p.begin(), p.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

bool same_class(const Partition& p, VertexId u, VertexId v) {
  for (const auto& cls : p)
    if (contains(cls, u)) return contains(cls, v);
  return false;
}

std::vector<VertexId> partition_ground_set(const Partition& p) {
  std::vector<VertexId> out;
  for (const auto& cls : p) out.insert(out.end(), cls.begin(), cls.end());
  return sorted_unique(std::move(out));
}

Partition restrict_partition(const Partition& p, const std::vector<VertexId>& keep) {
  Partition out;
  for (const auto& cls : p) {
    auto kept = set_intersection(cls, keep);
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  return canonical_partition(std::move(out));
}

bool refines(const Partition& fine, const Partition& coarse) {
  for (const auto& cls : fine) {
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (!same_class(coarse, cls[0], cls[i])) return false;
  }
  return true;
}

void validate_instance(const MmcuInstance& inst) {
  if (inst.vertex_budget < 0 || inst.edge_budget < 0)
    throw std::invalid_argument("instance: negative budget");
  for (VertexId t : inst.terminals)
    if (!inst.graph.has_vertex(t))
      throw std::invalid_argument("instance: terminal is not a live vertex");
  if (partition_ground_set(inst.classes) != inst.terminals)
    throw std::invalid_argument("instance: classes must partition the terminal set");
}

bool solution_subset(const MixedSolution& small, const MixedSolution& big) {
  return std::includes(big.vertices.begin(), big.vertices.end(),
                       small.vertices.begin(), small.vertices.end()) &&
         std::includes(big.edges.begin(), big.edges.end(), small.edges.begin(),
                       small.edges.end());
}

SolutionCheck check_solution(const MmcuInstance& inst, const MixedSolution& sol) {
  for (VertexId v : sol.vertices)
    if (!inst.graph.has_vertex(v))
      throw std::invalid_argument("solution: unknown vertex id");
  for (EdgeId e : sol.edges)
    if (!inst.graph.has_edge(e))
      throw std::invalid_argument("solution: unknown edge id");
  if (!set_intersection(sol.vertices, inst.terminals).empty())
    return {false, SolutionDefect::deletes_terminal};
  if (static_cast<int>(sol.vertices.size()) > inst.vertex_budget ||
      static_cast<int>(sol.edges.size()) > inst.edge_budget)
    return {false, SolutionDefect::budget_exceeded};
  ComponentIndex comp(inst.graph, sol.vertices, sol.edges);
  for (std::size_t i = 0; i < inst.terminals.size(); ++i)
    for (std::size_t j = i + 1; j < inst.terminals.size(); ++j) {
      VertexId u = inst.terminals[i], v = inst.terminals[j];
      if (comp.same_component(u, v) != same_class(inst.classes, u, v))
        return {false, SolutionDefect::connectivity_mismatch};
    }
  return {true, SolutionDefect::none};
}

bool is_solution(const MmcuInstance& inst, const MixedSolution& sol) {
  return check_solution(inst, sol).ok;
}

namespace {

// Elements of a solution as one ordered list: edges first, ascending ids,
// then vertices ascending. Index-subsets of this list name sub-pairs.
struct SolutionElems {
  const MixedSolution& sol;
  int edge_count;
  explicit SolutionElems(const MixedSolution& s)
      : sol(s), edge_count(static_cast<int>(s.edges.size())) {}
  int size() const { return solution_size(sol); }
  MixedSolution subset(const std::vector<int>& keep_idx) const {
    MixedSolution out;
    for (int i : keep_idx) {
      if (i < edge_count)
        out.edges.push_back(sol.edges[i]);
      else
        out.vertices.push_back(sol.vertices[i - edge_count]);
    }
    return out;
  }
};

// Tries every proper sub-pair in (size ascending, then lexicographic) order;
// returns the first one accepted by the predicate.
template <typename Pred>
std::optional<MixedSolution> first_valid_proper_subset(const MixedSolution& sol,
                                                       Pred& valid) {
  SolutionElems elems(sol);
  int n = elems.size();
  std::optional<MixedSolution> found;
  for (int size = 0; size < n && !found; ++size) {
    std::vector<int> idx(size);
    std::function<bool(int, int)> rec = [&](int pos, int start) {
      if (pos == size) {
        MixedSolution cand = elems.subset(idx);
        if (valid(cand)) {
          found = std::move(cand);
          return false;
        }
        return true;
      }
      for (int i = start; i <= n - (size - pos); ++i) {
        idx[pos] = i;
        if (!rec(pos + 1, i + 1)) return false;
      }
      return true;
    };
    rec(0, 0);
  }
  return found;
}

template <typename Pred>
bool minimal_under(const MixedSolution& sol, Pred&& valid, int exact_limit) {
  if (solution_size(sol) <= exact_limit)
    return !first_valid_proper_subset(sol, valid).has_value();
  // Above the limit only single-element removals are tested (approximation).
  SolutionElems elems(sol);
  int n = elems.size();
  std::vector<int> keep(n);
  for (int drop = 0; drop < n; ++drop) {
    keep.clear();
    for (int i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    if (valid(elems.subset(keep))) return false;
  }
  return true;
}

template <typename Pred>
MixedSolution minimalize_under(MixedSolution sol, Pred&& valid, int exact_limit) {
  bool changed = true;
  while (changed) {
    changed = false;
    // Greedy single-element removals: edges ascending, then vertices.
    bool restart = true;
    while (restart) {
      restart = false;
      SolutionElems elems(sol);
      int n = elems.size();
      std::vector<int> keep;
      for (int drop = 0; drop < n; ++drop) {
        keep.clear();
        for (int i = 0; i < n; ++i)
          if (i != drop) keep.push_back(i);
        MixedSolution cand = elems.subset(keep);
        if (valid(cand)) {
          sol = std::move(cand);
          restart = true;
          break;
        }
      }
    }
    if (solution_size(sol) <= exact_limit) {
      auto smaller = first_valid_proper_subset(sol, valid);
      if (smaller) {
        sol = std::move(*smaller);
        changed = true;
      }
    }
  }
  return sol;
}

}  // namespace

bool is_minimal_solution(const MmcuInstance& inst, const MixedSolution& sol,
                         int exact_subset_limit) {
  if (!is_solution(inst, sol))
    throw std::invalid_argument("is_minimal_solution: input is not a solution");
  auto valid = [&](const MixedSolution& c) { return is_solution(inst, c); };
  return minimal_under(sol, valid, exact_subset_limit);
}

MixedSolution minimalize(const MmcuInstance& inst, MixedSolution sol,
                         int exact_subset_limit) {
  if (!is_solution(inst, sol))
    throw std::invalid_argument("minimalize: input is not a solution");
  auto valid = [&](const MixedSolution& c) { return is_solution(inst, c); };
  MixedSolution out = minimalize_under(std::move(sol), valid, exact_subset_limit);
  // Minimal solutions never delete an edge next to a deleted vertex.
  for (EdgeId e : out.edges) {
    auto [a, b] = inst.graph.endpoints(e);
    if (contains(out.vertices, a) || contains(out.vertices, b))
      throw std::logic_error("minimalize: result has an edge incident to a deleted vertex");
  }
  return out;
}

void validate_border_instance(const BorderInstance& ib) {
  validate_instance(ib.base);
  for (VertexId v : ib.border)
    if (!ib.base.graph.has_vertex(v))
      throw std::invalid_argument("border instance: border vertex not live");
  if (!set_intersection(ib.border, ib.base.terminals).empty())
    throw std::invalid_argument("border instance: border overlaps terminals");
  int budget = ib.base.vertex_budget + ib.base.edge_budget;
  if (static_cast<int>(ib.border.size()) > 2 * budget)
    throw std::invalid_argument("border instance: border larger than 2(k+l)");
  if (connected_components(ib.base.graph).size() > 1)
    throw std::invalid_argument("border instance: graph must be connected");
}

namespace {

// All set partitions of `items` (restricted-growth order). Classes are
// addressed by index: the vector reallocates during recursion.
std::vector<Partition> all_partitions(const std::vector<VertexId>& items) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      out.push_back(canonical_partition(cur));
      return;
    }
    std::size_t open = cur.size();
    for (std::size_t ci = 0; ci < open; ++ci) {
      cur[ci].push_back(items[i]);
      rec(i + 1);
      cur[ci].pop_back();
    }
    cur.push_back({items[i]});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  if (out.empty()) out.push_back({});
  return out;
}

}  // namespace

std::vector<Profile> enumerate_profiles(const BorderInstance& ib) {
  validate_border_instance(ib);
  const auto& border = ib.border;
  const Partition& base_classes = ib.base.classes;
  std::vector<Profile> out;

  int nb = static_cast<int>(border.size());
  for_each_subset_lex(nb, nb, [&](const std::vector<int>& del_idx) {
    std::vector<VertexId> deleted;
    for (int i : del_idx) deleted.push_back(border[i]);
    std::vector<VertexId> live = set_difference(border, deleted);

    // Assign every live border vertex to an existing terminal class or to a
    // fresh border-only group (restricted growth keeps groups canonical).
    std::vector<Partition> targets;
    {
      Partition cur = base_classes;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == live.size()) {
          targets.push_back(canonical_partition(cur));
          return;
        }
        std::size_t open = cur.size();
        for (std::size_t ci = 0; ci < open; ++ci) {
          cur[ci].push_back(live[i]);
          rec(i + 1);
          cur[ci].pop_back();
        }
        cur.push_back({live[i]});
        rec(i + 1);
        cur.pop_back();
      };
      rec(0);
    }

    for (const Partition& target : targets) {
      // border_links must refine target restricted to the live border.
      Partition on_border = restrict_partition(target, live);
      std::vector<std::vector<Partition>> block_choices;
      for (const auto& block : on_border) block_choices.push_back(all_partitions(block));
      std::vector<std::size_t> pick(block_choices.size(), 0);
      while (true) {
        Partition links;
        for (std::size_t bi = 0; bi < block_choices.size(); ++bi)
          for (const auto& cls : block_choices[bi][pick[bi]]) links.push_back(cls);
        links = canonical_partition(std::move(links));
        for (int kc = 0; kc <= ib.base.vertex_budget; ++kc)
          for (int lc = 0; lc <= ib.base.edge_budget; ++lc)
            out.push_back(Profile{deleted, links, target, kc, lc});
        // Advance the mixed-radix picker over per-block partitions.
        std::size_t bi = 0;
        for (; bi < pick.size(); ++bi) {
          if (++pick[bi] < block_choices[bi].size()) break;
          pick[bi] = 0;
        }
        if (bi == pick.size()) break;
      }
    }
    return true;
  });
  return out;
}

bool is_border_solution(const BorderInstance& ib, const Profile& p,
                        const MixedSolution& sol) {
  const MmcuInstance& inst = ib.base;
  for (VertexId v : sol.vertices)
    if (!inst.graph.has_vertex(v))
      throw std::invalid_argument("border solution: unknown vertex id");
  for (EdgeId e : sol.edges)
    if (!inst.graph.has_edge(e))
      throw std::invalid_argument("border solution: unknown edge id");

  if (static_cast<int>(sol.vertices.size()) > p.vertex_cap) return false;
  if (static_cast<int>(sol.edges.size()) > p.edge_cap) return false;
  if (!set_intersection(sol.vertices, inst.terminals).empty()) return false;
  if (set_intersection(sol.vertices, ib.border) != p.deleted_border) return false;

  // Helper edges stand in for outside connections between related border
  // vertices; they are not deletable.
  MultiGraph gp = inst.graph;
  for (const auto& cls : p.border_links)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) gp.add_edge(cls[i], cls[j]);

  ComponentIndex comp(gp, sol.vertices, sol.edges);
  std::vector<VertexId> witnesses =
      set_union(inst.terminals, set_difference(ib.border, p.deleted_border));
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      VertexId u = witnesses[i], v = witnesses[j];
      if (comp.same_component(u, v) != same_class(p.target, u, v)) return false;
    }
  return true;
}

MixedSolution minimalize_border(const BorderInstance& ib, const Profile& p,
                                MixedSolution sol, int exact_subset_limit) {
  if (!is_border_solution(ib, p, sol))
    throw std::invalid_argument("minimalize_border: input is not a solution");
  auto valid = [&](const MixedSolution& c) { return is_border_solution(ib, p, c); };
  MixedSolution out = minimalize_under(std::move(sol), valid, exact_subset_limit);
  for (EdgeId e : out.edges) {
    auto [a, b] = ib.base.graph.endpoints(e);
    if (contains(out.vertices, a) || contains(out.vertices, b))
      throw std::logic_error(
          "minimalize_border: result has an edge incident to a deleted vertex");
  }
  return out;
}

}  // namespace mmcu
