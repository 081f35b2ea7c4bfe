#include "mmcu/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "mmcu/classreduce.hpp"
#include "mmcu/graphops.hpp"
#include "mmcu/oracle.hpp"
#include "mmcu/setfamily.hpp"
#include "mmcu/util.hpp"

namespace mmcu {

namespace {

int clamp_big(const BigInt& x, int cap) {
  return x > cap ? cap : static_cast<int>(x);
}


void validate_config(const SolverConfig& cfg) {
  if (cfg.mode == SolveMode::heuristic && !cfg.q_override)
    throw std::invalid_argument("heuristic mode requires a q override");
  if (cfg.q_override && *cfg.q_override <= 0)
    throw std::invalid_argument("q override must be positive");
}

BigInt effective_q(const SolverConfig& cfg, int k, int l) {
  if (cfg.mode == SolveMode::heuristic) return BigInt(*cfg.q_override);
  return compute_thresholds(k, l, 0).q;
}

// Applies the terminal surgeries and tracks everything needed to map
// profiles down to the reduced instance and witnesses back up: forced edge
// deletions accumulate, and every surviving terminal keeps the index of the
// original class it descends from.
class InstanceSurgeon {
 public:
  explicit InstanceSurgeon(const BorderInstance& ib) : orig_(ib), cur_(ib) {
    for (std::size_t i = 0; i < ib.base.classes.size(); ++i)
      for (VertexId t : ib.base.classes[i]) term_tag_[t] = static_cast<int>(i);
  }

  BorderInstance& cur() { return cur_; }
  const BorderInstance& cur() const { return cur_; }
  int forced_count() const { return static_cast<int>(forced_.size()); }

  void bypass_region(const std::vector<VertexId>& vs) {
    for (VertexId v : vs) cur_.base = bypass_vertex(cur_.base, v);
  }

  void prune_parallel() { cur_.base = prune_parallel_edges(cur_.base); }

  // Forced inter-class edge deletion and same-class identification run over
  // scope ∩ T; twin pruning runs over all terminals. Returns false when a
  // forced deletion would overdraw the edge budget (every profile is then
  // unsatisfiable).
  bool apply_terminal_rules(std::vector<VertexId> scope) {
    for (;;) {
      MmcuInstance& inst = cur_.base;
      std::vector<VertexId> st = set_intersection(scope, inst.terminals);

      EdgeId forced_pick = -1;
      for (EdgeId e : inst.graph.edges()) {
        auto [a, b] = inst.graph.endpoints(e);
        if (contains(st, a) && contains(st, b) && !same_class(inst.classes, a, b)) {
          forced_pick = e;
          break;
        }
      }
      if (forced_pick >= 0) {
        if (inst.edge_budget == 0) return false;
        inst.graph.remove_edge(forced_pick);
        inst.edge_budget -= 1;
        forced_.push_back(forced_pick);
        continue;
      }

      bool merged_any = false;
      for (std::size_t i = 0; i < st.size() && !merged_any; ++i)
        for (std::size_t j = i + 1; j < st.size() && !merged_any; ++j) {
          VertexId u = st[i], v = st[j];
          if (!same_class(inst.classes, u, v)) continue;
          bool adjacent = inst.graph.multiplicity(u, v) > 0;
          auto common =
              set_intersection(inst.graph.neighbors(u), inst.graph.neighbors(v));
          if (!adjacent && static_cast<int>(common.size()) <=
                               inst.vertex_budget + inst.edge_budget)
            continue;
          auto res = identify_terminals(inst, u, v);
          cur_.base = std::move(res.inst);
          term_tag_[res.merged] = term_tag_.at(u);
          term_tag_.erase(u);
          term_tag_.erase(v);
          scope = set_union(set_difference(scope, std::vector<VertexId>{u, v}),
                            std::vector<VertexId>{res.merged});
          merged_any = true;
        }
      if (merged_any) continue;

      MmcuInstance pruned = delete_redundant_terminals(cur_.base);
      if (pruned.terminals != cur_.base.terminals) {
        for (VertexId gone :
             set_difference(cur_.base.terminals, pruned.terminals))
          term_tag_.erase(gone);
        cur_.base = std::move(pruned);
        continue;
      }
      return true;
    }
  }

  // Profile of the original instance, re-expressed over the reduced one.
  // The caller guarantees edge_cap covers the forced deletions.
  Profile translate(const Profile& p) const {
    Profile out;
    out.deleted_border = p.deleted_border;
    out.border_links = p.border_links;
    out.vertex_cap = p.vertex_cap;
    out.edge_cap = p.edge_cap - forced_count();

    std::map<int, std::vector<VertexId>> by_tag;
    for (const auto& [t, tag] : term_tag_) by_tag[tag].push_back(t);
    Partition target;
    for (const auto& cls : p.target) {
      auto borders = set_intersection(cls, orig_.border);
      auto terms = set_difference(cls, borders);
      if (!terms.empty()) {
        auto& bucket = by_tag.at(original_class_of(terms.front()));
        bucket.insert(bucket.end(), borders.begin(), borders.end());
      } else if (!borders.empty()) {
        target.push_back(borders);
      }
    }
    for (auto& [tag, members] : by_tag) target.push_back(std::move(members));
    out.target = canonical_partition(std::move(target));
    return out;
  }

  // Witness of the reduced instance re-expressed upstream: forced edges go
  // back into the edge set. Nothing when the witness uses ids created by the
  // reduction (bypass shortcuts do not exist upstream).
  std::optional<MixedSolution> lift(MixedSolution sol) const {
    sol.edges = set_union(sol.edges, sorted_unique(forced_));
    for (EdgeId e : sol.edges)
      if (!orig_.base.graph.has_edge(e)) return std::nullopt;
    for (VertexId v : sol.vertices)
      if (!orig_.base.graph.has_vertex(v)) return std::nullopt;
    return sol;
  }

 private:
  int original_class_of(VertexId t) const {
    for (std::size_t i = 0; i < orig_.base.classes.size(); ++i)
      if (contains(orig_.base.classes[i], t)) return static_cast<int>(i);
    throw std::logic_error("solver: terminal missing from the original relation");
  }

  const BorderInstance& orig_;
  BorderInstance cur_;
  std::vector<EdgeId> forced_;
  std::map<VertexId, int> term_tag_;  // surviving terminal -> original class
};

struct PhaseContext {
  const BorderInstance* ib = nullptr;  // reduced instance
  long long q_eff = 0;
  bool disconnected = false;
  SetFamily family;
  std::vector<VertexId> universe_vertices;
  std::vector<EdgeId> universe_edges;
};

// Accepts a candidate of the reduced instance only when its lift is a
// solution of the entry-level instance and profile.
using LiftVerifier = std::function<bool(const MixedSolution&)>;

PhaseContext make_phase_context(const BorderInstance& ib, const BigInt& q_big) {
  PhaseContext ctx;
  ctx.ib = &ib;
  const MultiGraph& g = ib.base.graph;
  ctx.disconnected = connected_components(g).size() > 1;
  int k = ib.base.vertex_budget, l = ib.base.edge_budget;
  ctx.q_eff = clamp_big(q_big, g.num_vertices() + 1);
  ctx.universe_vertices = set_difference(g.vertices(), ib.base.terminals);
  ctx.universe_edges = g.edges();
  int usize = static_cast<int>(ctx.universe_vertices.size() + ctx.universe_edges.size());
  Thresholds th = compute_thresholds_with_q(q_big, k, l,
                                            static_cast<int>(ib.border.size()));
  int a = clamp_big(family_contains_bound(th, l), usize);
  int b = std::min(k + l, usize);
  ctx.family = build_family(usize, a, b);
  return ctx;
}

MixedSubset decode_member(const PhaseContext& ctx, const boost::dynamic_bitset<>& m) {
  MixedSubset s;
  int nv = static_cast<int>(ctx.universe_vertices.size());
  for (int i = 0; i < nv; ++i)
    if (m.test(i)) s.vertices.push_back(ctx.universe_vertices[i]);
  for (std::size_t j = 0; j < ctx.universe_edges.size(); ++j)
    if (m.test(nv + j)) s.edges.push_back(ctx.universe_edges[j]);
  return s;
}

// Union of the components containing a seed, built from the member's edges
// restricted to the allowed vertex set. Restricting matters: a member may
// carry stray edges into deleted vertices, and letting them pull those
// endpoints into the region would hide the deleted vertices from the
// region's neighbourhood, losing candidates. Edges fully inside a surviving
// component keep it intact, so the restriction recovers components exactly.
std::vector<VertexId> member_region(const MultiGraph& g, const MixedSubset& s,
                                    const std::vector<VertexId>& allowed_vertices,
                                    const std::vector<VertexId>& seeds) {
  std::vector<char> allowed(g.vertex_id_bound(), 0);
  for (VertexId v : allowed_vertices) allowed[v] = 1;
  std::vector<std::vector<VertexId>> adj(g.vertex_id_bound());
  for (EdgeId e : s.edges) {
    auto [a, b] = g.endpoints(e);
    if (!allowed[a] || !allowed[b]) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(g.vertex_id_bound(), 0);
  std::vector<VertexId> stack, region;
  for (VertexId v : seeds)
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    region.push_back(v);
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return sorted_unique(std::move(region));
}

void scan_member(const PhaseContext& ctx, const Profile& p, const MixedSubset& s,
                 const LiftVerifier& lift_ok, std::optional<MixedSolution>& best) {
  const MmcuInstance& inst = ctx.ib->base;
  const MultiGraph& g = inst.graph;
  int budget = inst.vertex_budget + inst.edge_budget;
  std::vector<VertexId> live_border = set_difference(ctx.ib->border, p.deleted_border);
  std::vector<VertexId> witnesses = set_union(inst.terminals, live_border);
  std::vector<VertexId> allowed =
      set_union(set_union(s.vertices, inst.terminals), live_border);

  std::vector<std::vector<VertexId>> big_options;
  if (!ctx.disconnected) {
    // One component can stay large, holding at most one pattern class.
    big_options.push_back({});
    for (const auto& cls : p.target) big_options.push_back(cls);
  } else {
    // Forced edge deletions can disconnect the graph mid-pipeline; then
    // several components may stay large, each with its own class, so the
    // exempt set ranges over unions of classes.
    std::size_t classes = p.target.size();
    for_each_subset_lex(static_cast<int>(classes), static_cast<int>(classes),
                        [&](const std::vector<int>& pick) {
                          std::vector<VertexId> joint;
                          for (int ci : pick)
                            joint = set_union(joint, p.target[ci]);
                          big_options.push_back(std::move(joint));
                          return true;
                        });
  }

  int y_max = p.vertex_cap - static_cast<int>(p.deleted_border.size());
  if (y_max < 0) return;

  for (const auto& tbig : big_options) {
    std::vector<VertexId> seeds = set_difference(witnesses, tbig);
    std::vector<VertexId> region = member_region(g, s, allowed, seeds);
    std::vector<VertexId> frontier = neighborhood_of_set(g, region);
    if (static_cast<int>(frontier.size()) > budget) continue;
    std::vector<VertexId> y_cand =
        set_difference(set_difference(frontier, inst.terminals), ctx.ib->border);

    for_each_subset_lex(
        static_cast<int>(y_cand.size()), y_max, [&](const std::vector<int>& idx) {
          std::vector<VertexId> extra;
          for (int i : idx) extra.push_back(y_cand[i]);
          MixedSolution cand;
          cand.vertices = set_union(p.deleted_border, extra);
          cand.edges = boundary_edges(g, cand.vertices, region);
          if (static_cast<int>(cand.edges.size()) > p.edge_cap) return true;
          if (best && !(cand < *best)) return true;
          if (is_border_solution(*ctx.ib, p, cand) &&
              interrogates(g, inst.terminals, cand, s, ctx.q_eff) && lift_ok(cand))
            best = cand;
          return true;
        });
  }
}

// Lexicographically least candidate accepted by every check, still in the
// reduced instance's terms; the caller lifts and minimalizes.
std::optional<MixedSolution> phase_core(const PhaseContext& ctx, const Profile& p,
                                        const LiftVerifier& lift_ok) {
  int members = static_cast<int>(ctx.family.members.size());
  std::optional<MixedSolution> best;
#pragma omp parallel
  {
    std::optional<MixedSolution> mine;
#pragma omp for schedule(dynamic, 8)
    for (int i = 0; i < members; ++i) {
      MixedSubset s = decode_member(ctx, ctx.family.members[i]);
      scan_member(ctx, p, s, lift_ok, mine);
    }
#pragma omp critical
    if (mine && (!best || *mine < *best)) best = std::move(mine);
  }
  return best;
}

}  // namespace

std::vector<EdgeId> boundary_edges(const MultiGraph& g, const std::vector<VertexId>& x,
                                   const std::vector<VertexId>& region) {
  std::vector<char> in_region(g.vertex_id_bound(), 0), in_x(g.vertex_id_bound(), 0);
  for (VertexId v : region) in_region[v] = 1;
  for (VertexId v : x) in_x[v] = 1;
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    if (in_x[a] || in_x[b]) continue;
    if (in_region[a] + in_region[b] == 1) out.push_back(e);
  }
  return out;
}

bool interrogates(const MultiGraph& g, const std::vector<VertexId>& terminals,
                  const MixedSolution& sol, const MixedSubset& s, long long q_eff) {
  if (!set_intersection(s.vertices, sol.vertices).empty()) return false;
  if (!set_intersection(s.edges, sol.edges).empty()) return false;
  ComponentIndex comp(g, sol.vertices, sol.edges);

  std::vector<long long> outside(comp.num_components(), 0);
  std::vector<char> is_term(g.vertex_id_bound(), 0);
  for (VertexId t : terminals) is_term[t] = 1;
  for (VertexId v : g.vertices())
    if (comp.alive(v) && !is_term[v]) outside[comp.component_of(v)] += 1;

  std::vector<char> in_s_vertex(g.vertex_id_bound(), 0);
  for (VertexId v : s.vertices) in_s_vertex[v] = 1;
  std::vector<char> in_s_edge(g.edge_id_bound(), 0);
  for (EdgeId e : s.edges) in_s_edge[e] = 1;

  for (VertexId v : g.vertices()) {
    if (!comp.alive(v) || is_term[v]) continue;
    if (outside[comp.component_of(v)] <= q_eff && !in_s_vertex[v]) return false;
  }
  for (EdgeId e : g.edges()) {
    if (contains(sol.edges, e)) continue;
    auto [a, b] = g.endpoints(e);
    if (!comp.alive(a) || !comp.alive(b)) continue;
    if (outside[comp.component_of(a)] <= q_eff && !in_s_edge[e]) return false;
  }
  return true;
}

BorderInstance build_sub_instance(const BorderInstance& ib, const RecursionSplit& split) {
  const MultiGraph& g = ib.base.graph;
  int budget = ib.base.vertex_budget + ib.base.edge_budget;
  if (static_cast<int>(split.separator.size()) > budget)
    throw std::invalid_argument("recursion split: separator exceeds k+l (" +
                                std::to_string(split.separator.size()) + " > " +
                                std::to_string(budget) + ")");
  if (!set_intersection(split.separator, ib.base.terminals).empty())
    throw std::invalid_argument("recursion split: separator touches a terminal");
  if (static_cast<int>(set_intersection(split.region, ib.border).size()) > budget)
    throw std::invalid_argument("recursion split: region holds too many border vertices");
  std::vector<VertexId> attach = neighborhood_of_set(g, split.region);
  if (!set_difference(attach, split.separator).empty())
    throw std::invalid_argument("recursion split: region neighbourhood escapes the separator");

  std::vector<VertexId> w = set_union(split.region, attach);
  BorderInstance sub;
  sub.base.graph = induced_subgraph(g, w);
  sub.base.terminals = set_intersection(ib.base.terminals, w);
  sub.base.classes = restrict_partition(ib.base.classes, w);
  sub.base.vertex_budget = ib.base.vertex_budget;
  sub.base.edge_budget = ib.base.edge_budget;
  sub.border = set_intersection(set_union(ib.border, attach), w);
  validate_border_instance(sub);
  return sub;
}

std::vector<VertexId> affected_union(const BorderInstance& sub, const BorderOutput& out) {
  std::vector<VertexId> u = sub.border;
  for (const auto& [p, sol] : out) {
    if (!sol) continue;
    u.insert(u.end(), sol->vertices.begin(), sol->vertices.end());
    for (EdgeId e : sol->edges) {
      auto [a, b] = sub.base.graph.endpoints(e);
      u.push_back(a);
      u.push_back(b);
    }
  }
  std::vector<VertexId> result = sorted_unique(std::move(u));
  // Each entry affects at most k + 2l vertices.
  std::size_t bound = sub.border.size() +
                      out.size() * (sub.base.vertex_budget + 2 * sub.base.edge_budget);
  if (result.size() > bound)
    throw std::logic_error("affected_union: exceeds its size bound");
  return result;
}

BorderOutput solve_border(const BorderInstance& ib, const SolverConfig& cfg) {
  validate_config(cfg);
  validate_border_instance(ib);
  int k = ib.base.vertex_budget, l = ib.base.edge_budget;
  BigInt q_big = effective_q(cfg, k, l);

  InstanceSurgeon surgeon(ib);
  bool all_infeasible = false;

  for (;;) {
    const MultiGraph& g = surgeon.cur().base.graph;
    // Forced edge deletions shrink the current edge budget; the restarted
    // search must respect the shrunken budgets (and, in sound mode, their
    // threshold).
    int k_cur = surgeon.cur().base.vertex_budget;
    int l_cur = surgeon.cur().base.edge_budget;
    BigInt q_cur = cfg.mode == SolveMode::sound ? effective_q(cfg, k_cur, l_cur) : q_big;
    int n = g.num_vertices();
    int q_int = clamp_big(q_cur, n + 1);
    if (q_int > n) break;  // no side can exceed the vertex count
    // Forced edge deletions can disconnect the graph; separations are only
    // defined on connected graphs, so fall through to the branching phase,
    // which handles several large components.
    if (connected_components(g).size() > 1) break;

    RecursionSplit split;
    bool have_split = false;
    auto good =
        find_good_node_separation(g, surgeon.cur().base.terminals, q_int, k_cur + l_cur);
    if (good) {
      bool a_fits = static_cast<int>(
                        set_intersection(good->side_a, surgeon.cur().border).size()) <=
                    k_cur + l_cur;
      split.separator = good->separator;
      split.region = a_fits ? good->side_a : good->side_b;
      have_split = true;
    } else {
      auto flower = find_flower_separation(g, surgeon.cur().base.terminals,
                                           surgeon.cur().border, q_int, k_cur + l_cur);
      if (flower) {
        split.separator = flower->core;
        for (const auto& petal : flower->petals)
          split.region = set_union(split.region, petal);
        have_split = true;
      }
    }
    if (!have_split) break;

    BorderInstance sub = build_sub_instance(surgeon.cur(), split);
    if (sub.base.graph.num_vertices() >= n)
      throw std::logic_error("solver: recursion failed to shrink the graph");
    BorderOutput sub_out = solve_border(sub, cfg);
    std::vector<VertexId> touched = affected_union(sub, sub_out);
    std::vector<VertexId> to_bypass = set_difference(
        set_difference(split.region, surgeon.cur().base.terminals), touched);
    if (!set_intersection(to_bypass, surgeon.cur().border).empty())
      throw std::logic_error("solver: border vertex scheduled for bypass");

    bool progressed = !to_bypass.empty();
    surgeon.bypass_region(to_bypass);
    std::size_t terminals_before = surgeon.cur().base.terminals.size();
    int l_before = surgeon.cur().base.edge_budget;
    if (!surgeon.apply_terminal_rules(split.region)) {
      all_infeasible = true;
      break;
    }
    progressed |= surgeon.cur().base.terminals.size() != terminals_before;
    progressed |= surgeon.cur().base.edge_budget != l_before;
    if (cfg.mode == SolveMode::sound) {
      // With the formula threshold the affected union fits in q, so the
      // surviving non-terminal part of the region must too.
      int kept = 0;
      for (VertexId v : split.region)
        if (surgeon.cur().base.graph.has_vertex(v) &&
            !contains(surgeon.cur().base.terminals, v))
          ++kept;
      if (kept > q_int + k_cur + l_cur)
        throw std::logic_error("solver: region exceeds its post-reduction size bound");
    }
    // Under a small q override the affected union can cover the whole
    // region, leaving nothing to shrink; stop recursing then.
    if (!progressed) break;
  }

  BorderOutput out;
  std::vector<Profile> profiles = enumerate_profiles(ib);
  if (!all_infeasible) {
    if (!surgeon.apply_terminal_rules(surgeon.cur().base.terminals))
      all_infeasible = true;
    else
      surgeon.prune_parallel();
  }
  if (all_infeasible) {
    for (const Profile& p : profiles) out[p] = std::nullopt;
    return out;
  }

  PhaseContext ctx = make_phase_context(surgeon.cur(), q_big);
  for (const Profile& p : profiles) {
    if (p.edge_cap < surgeon.forced_count()) {
      out[p] = std::nullopt;
      continue;
    }
    // A reduced-instance candidate counts only when it also answers the
    // entry-level profile: a bypassed detour can make the reduced instance's
    // least witness invalid upstream while another candidate lifts fine.
    LiftVerifier lift_ok = [&](const MixedSolution& cand) {
      auto lifted = surgeon.lift(cand);
      return lifted && is_border_solution(ib, p, *lifted);
    };
    auto sol = phase_core(ctx, surgeon.translate(p), lift_ok);
    if (!sol) {
      out[p] = std::nullopt;
      continue;
    }
    MixedSolution lifted = *surgeon.lift(std::move(*sol));
    out[p] = minimalize_border(ib, p, std::move(lifted));
  }
  return out;
}

std::optional<MixedSolution> high_connectivity_phase(const BorderInstance& ib,
                                                     const Profile& p,
                                                     const SolverConfig& cfg) {
  validate_config(cfg);
  validate_border_instance(ib);
  BigInt q_big = effective_q(cfg, ib.base.vertex_budget, ib.base.edge_budget);

  InstanceSurgeon surgeon(ib);
  if (!surgeon.apply_terminal_rules(ib.base.terminals)) return std::nullopt;
  surgeon.prune_parallel();
  if (p.edge_cap < surgeon.forced_count()) return std::nullopt;

  PhaseContext ctx = make_phase_context(surgeon.cur(), q_big);
  LiftVerifier lift_ok = [&](const MixedSolution& cand) {
    auto lifted = surgeon.lift(cand);
    return lifted && is_border_solution(ib, p, *lifted);
  };
  auto sol = phase_core(ctx, surgeon.translate(p), lift_ok);
  if (!sol) return std::nullopt;
  MixedSolution lifted = *surgeon.lift(std::move(*sol));
  return minimalize_border(ib, p, std::move(lifted));
}

std::optional<MixedSolution> solve_mmcu(const MmcuInstance& inst, const SolverConfig& cfg) {
  validate_config(cfg);
  validate_instance(inst);

  auto no_answer = [&]() -> std::optional<MixedSolution> {
    if (cfg.crosscheck_no_with_oracle) {
      try {
        if (oracle_solve(inst))
          throw AuditError("solver: answered no but the oracle found a solution");
      } catch (const OracleGuardError&) {
      }
    }
    return std::nullopt;
  };

  ForcedVertexReduction forced = delete_forced_vertices(inst);
  if (!forced.feasible) return no_answer();
  if (!component_classes_ok(forced.inst)) return no_answer();

  auto comps = connected_components(forced.inst.graph);
  std::map<std::vector<VertexId>, std::size_t> comp_index;
  std::vector<BorderOutput> outputs;
  for (const auto& comp : comps) {
    BorderInstance bi;
    bi.base.graph = induced_subgraph(forced.inst.graph, comp);
    bi.base.terminals = set_intersection(forced.inst.terminals, comp);
    bi.base.classes = restrict_partition(forced.inst.classes, comp);
    bi.base.vertex_budget = forced.inst.vertex_budget;
    bi.base.edge_budget = forced.inst.edge_budget;
    comp_index[comp] = outputs.size();
    outputs.push_back(solve_border(bi, cfg));
  }

  SubSolver lookup = [&](const MmcuInstance& s) -> std::optional<MixedSolution> {
    Profile key{{}, {}, s.classes, s.vertex_budget, s.edge_budget};
    const BorderOutput& bo = outputs[comp_index.at(s.graph.vertices())];
    auto it = bo.find(key);
    if (it == bo.end())
      throw std::logic_error("solver: bordered output is missing a budget entry");
    return it->second;
  };

  auto combined = solve_by_components(forced.inst, lookup);
  if (!combined) return no_answer();

  MixedSolution total;
  total.vertices = set_union(combined->vertices, sorted_unique(forced.removed));
  total.edges = combined->edges;
  if (!is_solution(inst, total))
    throw AuditError("solver: assembled witness failed verification");
  return minimalize(inst, total);
}

}  // namespace mmcu
