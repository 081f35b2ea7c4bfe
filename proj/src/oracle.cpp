#include "mmcu/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "mmcu/util.hpp"

namespace mmcu {

namespace {

// Validity check over candidate index sets, with reusable scratch. One
// checker per thread; `valid` unions the surviving edges and compares the
// terminal component pattern with the required classes.
class CandidateChecker {
 public:
  explicit CandidateChecker(const MmcuInstance& inst) : inst_(inst) {
    deletable_ = set_difference(inst.graph.vertices(), inst.terminals);
    for (EdgeId e : inst.graph.edges()) {
      auto [a, b] = inst.graph.endpoints(e);
      edge_ids_.push_back(e);
      edge_ends_.emplace_back(a, b);
    }
    int vb = inst.graph.vertex_id_bound();
    class_of_.assign(vb, -1);
    for (std::size_t c = 0; c < inst.classes.size(); ++c)
      for (VertexId t : inst.classes[c]) class_of_[t] = static_cast<int>(c);
    parent_.resize(vb);
    xmark_.assign(vb, 0);
    fmark_.assign(edge_ids_.size(), 0);
  }

  int deletable_count() const { return static_cast<int>(deletable_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }

  MixedSolution to_solution(const std::vector<int>& x_pos,
                            const std::vector<int>& f_pos) const {
    MixedSolution s;
    for (int i : x_pos) s.vertices.push_back(deletable_[i]);
    for (int j : f_pos) s.edges.push_back(edge_ids_[j]);
    return s;
  }

  bool valid(const std::vector<int>& x_pos, const std::vector<int>& f_pos) {
    for (int i : x_pos) xmark_[deletable_[i]] = 1;
    for (int j : f_pos) fmark_[j] = 1;
    for (VertexId v = 0; v < static_cast<VertexId>(parent_.size()); ++v) parent_[v] = v;
    for (std::size_t j = 0; j < edge_ends_.size(); ++j) {
      if (fmark_[j]) continue;
      auto [a, b] = edge_ends_[j];
      if (xmark_[a] || xmark_[b]) continue;
      unite(a, b);
    }
    bool ok = true;
    const auto& terms = inst_.terminals;
    for (std::size_t i = 0; i < terms.size() && ok; ++i)
      for (std::size_t j = i + 1; j < terms.size() && ok; ++j) {
        bool same = find(terms[i]) == find(terms[j]);
        bool want = class_of_[terms[i]] == class_of_[terms[j]];
        if (same != want) ok = false;
      }
    for (int i : x_pos) xmark_[deletable_[i]] = 0;
    for (int j : f_pos) fmark_[j] = 0;
    return ok;
  }

  // First valid edge set for a fixed vertex set, in lexicographic order.
  std::optional<std::vector<int>> first_valid_edges(const std::vector<int>& x_pos,
                                                    int max_edges) {
    std::optional<std::vector<int>> found;
    for_each_subset_lex(edge_count(), max_edges, [&](const std::vector<int>& f_pos) {
      if (valid(x_pos, f_pos)) {
        found = f_pos;
        return false;
      }
      return true;
    });
    return found;
  }

 private:
  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a < b ? b : a] = (a < b ? a : b);
  }

  const MmcuInstance& inst_;
  std::vector<VertexId> deletable_;
  std::vector<EdgeId> edge_ids_;
  std::vector<std::pair<VertexId, VertexId>> edge_ends_;
  std::vector<int> class_of_;
  std::vector<VertexId> parent_;
  std::vector<char> xmark_, fmark_;
};

void check_guard(const MmcuInstance& inst, const OracleLimits& limits) {
  validate_instance(inst);
  double xs = subset_count(inst.graph.num_vertices() - static_cast<int>(inst.terminals.size()),
                           inst.vertex_budget);
  double fs = subset_count(inst.graph.num_edges(), inst.edge_budget);
  if (xs * fs > limits.max_candidates)
    throw OracleGuardError("oracle: candidate count exceeds the configured cap");
}

}  // namespace

std::optional<MixedSolution> oracle_solve_serial(const MmcuInstance& inst,
                                                 const OracleLimits& limits) {
  check_guard(inst, limits);
  CandidateChecker checker(inst);
  std::optional<MixedSolution> result;
  for_each_subset_lex(checker.deletable_count(), inst.vertex_budget,
                      [&](const std::vector<int>& x_pos) {
                        auto f = checker.first_valid_edges(x_pos, inst.edge_budget);
                        if (f) {
                          result = checker.to_solution(x_pos, *f);
                          return false;
                        }
                        return true;
                      });
  return result;
}

std::optional<MixedSolution> oracle_solve(const MmcuInstance& inst,
                                          const OracleLimits& limits) {
  check_guard(inst, limits);
  double xs_count = subset_count(
      inst.graph.num_vertices() - static_cast<int>(inst.terminals.size()),
      inst.vertex_budget);
  if (xs_count > 1e6) return oracle_solve_serial(inst, limits);

  CandidateChecker proto(inst);
  std::vector<std::vector<int>> xs =
      all_subsets_lex(proto.deletable_count(), inst.vertex_budget);
  int n = static_cast<int>(xs.size());
  std::vector<std::optional<std::vector<int>>> found(n);
  std::atomic<int> best{std::numeric_limits<int>::max()};

#pragma omp parallel
  {
    CandidateChecker checker(inst);
#pragma omp for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) continue;
      auto f = checker.first_valid_edges(xs[i], inst.edge_budget);
      if (f) {
        found[i] = std::move(f);
        int cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  }
  int win = best.load();
  if (win == std::numeric_limits<int>::max()) return std::nullopt;
  return proto.to_solution(xs[win], *found[win]);
}

std::vector<MixedSolution> oracle_all_minimal(const MmcuInstance& inst,
                                              const OracleLimits& limits) {
  check_guard(inst, limits);
  CandidateChecker proto(inst);
  std::vector<std::vector<int>> xs =
      all_subsets_lex(proto.deletable_count(), inst.vertex_budget);
  int n = static_cast<int>(xs.size());

  std::vector<MixedSolution> valid_all;
#pragma omp parallel
  {
    CandidateChecker checker(inst);
    std::vector<MixedSolution> mine;
#pragma omp for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) {
      for_each_subset_lex(checker.edge_count(), inst.edge_budget,
                          [&](const std::vector<int>& f_pos) {
                            if (checker.valid(xs[i], f_pos))
                              mine.push_back(checker.to_solution(xs[i], f_pos));
                            return true;
                          });
    }
#pragma omp critical
    valid_all.insert(valid_all.end(), mine.begin(), mine.end());
  }
  std::sort(valid_all.begin(), valid_all.end());

  std::vector<MixedSolution> minimal;
  for (const auto& s : valid_all) {
    bool dominated = false;
    for (const auto& t : valid_all) {
      if (t != s && solution_subset(t, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

bool oracle_bpvc(const BpvcInstance& b, const OracleLimits& limits) {
  validate_bpvc(b);
  std::vector<VertexId> all = set_union(b.left, b.right);
  if (subset_count(static_cast<int>(all.size()), b.cover_budget) *
          static_cast<double>(b.edges.size() + 1) >
      limits.max_candidates)
    throw OracleGuardError("oracle_bpvc: candidate count exceeds the configured cap");

  bool found = false;
  for_each_subset_lex(static_cast<int>(all.size()), b.cover_budget,
                      [&](const std::vector<int>& idx) {
                        std::vector<char> in(all.size(), 0);
                        for (int i : idx) in[i] = 1;
                        int covered = 0;
                        for (auto [x, y] : b.edges) {
                          auto xi = std::lower_bound(all.begin(), all.end(), x) - all.begin();
                          auto yi = std::lower_bound(all.begin(), all.end(), y) - all.begin();
                          if (in[xi] || in[yi]) ++covered;
                        }
                        if (covered >= b.cover_target) {
                          found = true;
                          return false;
                        }
                        return true;
                      });
  return found;
}

}  // namespace mmcu
