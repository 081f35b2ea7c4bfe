#include "mmcu/separations.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "mmcu/util.hpp"

namespace mmcu {

namespace {

BigInt bigpow(const BigInt& base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// q' style bound: (base)^(s+1) + (l+2) * s * (s+1) * sum_{i=1..s} base^i
// with s = k+l and base = q + k + l (or qt + k + l).
BigInt region_terminal_bound(const BigInt& base, int k, int l) {
  int s = k + l;
  BigInt sum = 0;
  for (int i = 1; i <= s; ++i) sum += bigpow(base, i);
  return bigpow(base, s + 1) + BigInt(l + 2) * s * (s + 1) * sum;
}

}  // namespace

Thresholds compute_thresholds_with_q(const BigInt& q, int k, int l, int border_size) {
  if (k < 0 || l < 0 || border_size < 0)
    throw std::invalid_argument("compute_thresholds: negative parameter");
  int s = k + l;
  Thresholds th;
  th.q = q;
  th.t = (2 * q + 2) * (bigpow(2, s) - 1) + 2 * s + 1;
  th.q_prime = region_terminal_bound(q + s, k, l);
  th.q_dprime = region_terminal_bound(q * th.t + s, k, l);
  BigInt b(border_size);
  th.profile_bound =
      BigInt(k + 1) * (l + 1) * bigpow(1 + b * (b + BigInt(s) * (s + 1)), border_size);
  return th;
}

Thresholds compute_thresholds(int k, int l, int border_size) {
  int s = k + l;
  BigInt q = BigInt(k + 2 * l) * (k + 1) * (l + 1) *
                 bigpow(1 + 2 * BigInt(s) * s * (s + 3), 2 * s) +
             s;
  return compute_thresholds_with_q(q, k, l, border_size);
}

BigInt family_contains_bound(const Thresholds& th, int l) {
  BigInt s = th.q_dprime + th.q * th.t;
  return s + BigInt(l + 1) * (s * (s - 1) / 2);
}

long long high_connectivity_component_bound(long long q, int k, int border_size) {
  if (k < 0 || k > 60)
    throw std::invalid_argument("high_connectivity_component_bound: k out of range");
  return (2 * q + 2) * ((1LL << k) - 1) + border_size + 1;
}

namespace {

struct SeparationScratch {
  std::vector<char> removed;
  std::vector<int> comp;
  std::vector<VertexId> stack;

  explicit SeparationScratch(const MultiGraph& g)
      : removed(g.vertex_id_bound(), 0), comp(g.vertex_id_bound(), -1) {}

  // Components of g - Z; returns them sorted by minimum vertex id.
  std::vector<std::vector<VertexId>> components_without(
      const MultiGraph& g, const std::vector<VertexId>& z) {
    std::fill(comp.begin(), comp.end(), -1);
    for (VertexId v : z) removed[v] = 1;
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < g.vertex_id_bound(); ++s) {
      if (!g.has_vertex(s) || removed[s] || comp[s] >= 0) continue;
      int id = static_cast<int>(comps.size());
      comp[s] = id;
      stack.assign(1, s);
      std::vector<VertexId> members;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (EdgeId e : g.incident_edges(v)) {
          auto [a, b] = g.endpoints(e);
          VertexId w = (a == v) ? b : a;
          if (removed[w] || comp[w] >= 0) continue;
          comp[w] = id;
          stack.push_back(w);
        }
      }
      std::sort(members.begin(), members.end());
      comps.push_back(std::move(members));
    }
    for (VertexId v : z) removed[v] = 0;
    return comps;
  }
};

std::optional<GoodNodeSeparation> good_separation_for(
    const MultiGraph& g, const std::vector<VertexId>& candidates,
    const std::vector<char>& undeletable_mark, const std::vector<int>& z_idx, int q,
    SeparationScratch& scratch) {
  std::vector<VertexId> z;
  for (int i : z_idx) z.push_back(candidates[i]);
  auto comps = scratch.components_without(g, z);
  std::vector<const std::vector<VertexId>*> big;
  for (const auto& c : comps) {
    int outside = 0;
    for (VertexId v : c)
      if (!undeletable_mark[v]) ++outside;
    if (outside > q) big.push_back(&c);
    if (big.size() == 2) break;
  }
  if (big.size() < 2) return std::nullopt;
  return GoodNodeSeparation{z, *big[0], *big[1]};
}

}  // namespace

std::optional<GoodNodeSeparation> find_good_node_separation_serial(
    const MultiGraph& g, const std::vector<VertexId>& undeletable, int q, int k) {
  if (connected_components(g).size() > 1)
    throw std::invalid_argument("find_good_node_separation: graph must be connected");
  std::vector<VertexId> candidates = set_difference(g.vertices(), undeletable);
  std::vector<char> mark(g.vertex_id_bound(), 0);
  for (VertexId v : undeletable) mark[v] = 1;
  SeparationScratch scratch(g);
  std::optional<GoodNodeSeparation> result;
  for_each_subset_lex(static_cast<int>(candidates.size()), k,
                      [&](const std::vector<int>& z_idx) {
                        auto sep = good_separation_for(g, candidates, mark, z_idx, q, scratch);
                        if (sep) {
                          result = std::move(sep);
                          return false;
                        }
                        return true;
                      });
  return result;
}

std::optional<GoodNodeSeparation> find_good_node_separation(
    const MultiGraph& g, const std::vector<VertexId>& undeletable, int q, int k) {
  if (connected_components(g).size() > 1)
    throw std::invalid_argument("find_good_node_separation: graph must be connected");
  std::vector<VertexId> candidates = set_difference(g.vertices(), undeletable);
  if (subset_count(static_cast<int>(candidates.size()), k) > 1e6)
    return find_good_node_separation_serial(g, undeletable, q, k);
  std::vector<char> mark(g.vertex_id_bound(), 0);
  for (VertexId v : undeletable) mark[v] = 1;

  auto zs = all_subsets_lex(static_cast<int>(candidates.size()), k);
  int n = static_cast<int>(zs.size());
  std::vector<std::optional<GoodNodeSeparation>> found(n);
  std::atomic<int> best{std::numeric_limits<int>::max()};
#pragma omp parallel
  {
    SeparationScratch scratch(g);
#pragma omp for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) continue;
      auto sep = good_separation_for(g, candidates, mark, zs[i], q, scratch);
      if (sep) {
        found[i] = std::move(sep);
        int cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  }
  int win = best.load();
  if (win == std::numeric_limits<int>::max()) return std::nullopt;
  return found[win];
}

std::optional<FlowerSeparation> find_flower_separation(
    const MultiGraph& g, const std::vector<VertexId>& undeletable,
    const std::vector<VertexId>& border, int q, int k) {
  if (connected_components(g).size() > 1)
    throw std::invalid_argument("find_flower_separation: graph must be connected");
  std::vector<VertexId> candidates = set_difference(g.vertices(), undeletable);
  std::vector<char> undel_mark(g.vertex_id_bound(), 0);
  for (VertexId v : undeletable) undel_mark[v] = 1;
  SeparationScratch scratch(g);

  auto outside_count = [&](const std::vector<VertexId>& vs) {
    int c = 0;
    for (VertexId v : vs)
      if (!undel_mark[v]) ++c;
    return c;
  };

  std::optional<FlowerSeparation> result;
  for_each_subset_lex(
      static_cast<int>(candidates.size()), k, [&](const std::vector<int>& z_idx) {
        if (z_idx.empty()) return true;  // the core must be nonempty
        std::vector<VertexId> core;
        for (int i : z_idx) core.push_back(candidates[i]);
        auto comps = scratch.components_without(g, core);

        std::vector<const std::vector<VertexId>*> petals;
        for (const auto& c : comps) {
          if (!set_intersection(c, border).empty()) continue;
          if (outside_count(c) > q) continue;
          if (neighborhood_of_set(g, c) != core) continue;
          petals.push_back(&c);
        }
        if (petals.empty()) return true;

        int total_outside_all = 0;
        for (const auto& c : comps) total_outside_all += outside_count(c);

        auto stalk_ok = [&](const std::vector<int>& chosen) {
          int picked = 0;
          for (int i : chosen) picked += outside_count(*petals[i]);
          // The stalk is everything outside the core and the chosen petals.
          return picked > q && (total_outside_all - picked) > q;
        };

        // Greedy prefixes by petal size, both directions, then exhaustive.
        auto try_greedy = [&](bool descending) -> std::optional<std::vector<int>> {
          std::vector<int> order(petals.size());
          for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
          std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            int sx = outside_count(*petals[x]), sy = outside_count(*petals[y]);
            return descending ? sx > sy : sx < sy;
          });
          std::vector<int> chosen;
          int picked = 0;
          for (int i : order) {
            chosen.push_back(i);
            picked += outside_count(*petals[i]);
            if (picked > q) break;
          }
          if (picked > q && stalk_ok(chosen)) return chosen;
          return std::nullopt;
        };

        std::optional<std::vector<int>> chosen = try_greedy(true);
        if (!chosen) chosen = try_greedy(false);
        if (!chosen && petals.size() <= 20) {
          for_each_subset_lex(static_cast<int>(petals.size()),
                              static_cast<int>(petals.size()),
                              [&](const std::vector<int>& sub) {
                                if (!sub.empty() && stalk_ok(sub)) {
                                  chosen = sub;
                                  return false;
                                }
                                return true;
                              });
        }
        if (!chosen) return true;

        FlowerSeparation flower;
        flower.core = core;
        std::vector<int> sel = *chosen;
        std::sort(sel.begin(), sel.end());
        for (int i : sel) flower.petals.push_back(*petals[i]);
        result = std::move(flower);
        return false;
      });
  return result;
}

}  // namespace mmcu
