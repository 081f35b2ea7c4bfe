#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mmcu/generators.hpp"
#include "mmcu/multigraph.hpp"
#include "mmcu/util.hpp"

using namespace mmcu;

namespace {

MultiGraph path3() {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("neighbors") {
  MultiGraph g = path3();
  CHECK(g.neighbors(1) == std::vector<VertexId>{0, 2});

  MultiGraph iso(1);
  CHECK(iso.neighbors(0).empty());

  MultiGraph dbl(2);
  dbl.add_edge(0, 1);
  dbl.add_edge(0, 1);
  CHECK(dbl.neighbors(0) == std::vector<VertexId>{1});  // dedup across copies
  CHECK(dbl.multiplicity(0, 1) == 2);

  CHECK_THROWS_AS(g.neighbors(17), std::invalid_argument);
}

TEST_CASE("neighborhood_of_set") {
  MultiGraph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK(neighborhood_of_set(p4, {1, 2}) == std::vector<VertexId>{0, 3});
  CHECK(neighborhood_of_set(p4, {0, 1, 2, 3}).empty());

  MultiGraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(neighborhood_of_set(star, {1}) == std::vector<VertexId>{0});
  CHECK_THROWS_AS(neighborhood_of_set(star, {9}), std::invalid_argument);
}

TEST_CASE("remove_solution") {
  MultiGraph g = path3();
  MultiGraph no_mid = remove_solution(g, {1}, {});
  CHECK(no_mid.num_vertices() == 2);
  CHECK(no_mid.num_edges() == 0);

  MultiGraph no_first_edge = remove_solution(g, {}, {0});
  CHECK(no_first_edge.num_vertices() == 3);
  CHECK(no_first_edge.num_edges() == 1);
  CHECK(no_first_edge.has_edge(1));

  MultiGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  MultiGraph same = remove_solution(tri, {}, {});
  CHECK(same.num_vertices() == 3);
  CHECK(same.num_edges() == 3);
}

TEST_CASE("remove_solution count property") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    MultiGraph g = random_connected_graph(rng(), 7, 5, true);
    std::vector<VertexId> x;
    std::vector<EdgeId> f;
    for (VertexId v : g.vertices())
      if (rng() % 3 == 0) x.push_back(v);
    for (EdgeId e : g.edges())
      if (rng() % 3 == 0) f.push_back(e);
    MultiGraph h = remove_solution(g, x, f);
    int incident = 0;
    std::vector<EdgeId> f_or_incident = f;
    for (EdgeId e : g.edges()) {
      auto [a, b] = g.endpoints(e);
      if (contains(x, a) || contains(x, b)) f_or_incident.push_back(e);
    }
    f_or_incident = sorted_unique(std::move(f_or_incident));
    (void)incident;
    CHECK(h.num_vertices() == g.num_vertices() - static_cast<int>(x.size()));
    CHECK(h.num_edges() == g.num_edges() - static_cast<int>(f_or_incident.size()));
  }
}

TEST_CASE("connected_components") {
  MultiGraph empty;
  CHECK(connected_components(empty).empty());

  MultiGraph g = path3();
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == std::vector<VertexId>{0, 1, 2});

  MultiGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK(connected_components(two).size() == 2);
}

TEST_CASE("connected_components is a partition") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    MultiGraph g(8);
    for (int e = 0; e < 6; ++e) {
      VertexId u = rng() % 8, v = rng() % 8;
      if (u != v) g.add_edge(u, v);
    }
    auto comps = connected_components(g);
    std::vector<VertexId> all;
    for (const auto& c : comps) all.insert(all.end(), c.begin(), c.end());
    CHECK(sorted_unique(all) == g.vertices());
    CHECK(all.size() == sorted_unique(all).size());
    for (EdgeId e : g.edges()) {
      auto [a, b] = g.endpoints(e);
      int ca = -1, cb = -2;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (contains(comps[i], a)) ca = static_cast<int>(i);
        if (contains(comps[i], b)) cb = static_cast<int>(i);
      }
      CHECK(ca == cb);  // no edge between parts
    }
  }
}

TEST_CASE("edge_subgraph") {
  MultiGraph tri(3);
  EdgeId ab = tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);

  MultiGraph only_a = edge_subgraph(tri, {0}, {});
  CHECK(only_a.num_vertices() == 1);
  CHECK(only_a.num_edges() == 0);

  MultiGraph one_edge = edge_subgraph(tri, {}, {ab});
  CHECK(one_edge.num_vertices() == 2);  // endpoints induced
  CHECK(one_edge.num_edges() == 1);

  MultiGraph all = edge_subgraph(tri, tri.vertices(), tri.edges());
  CHECK(all.num_vertices() == 3);
  CHECK(all.num_edges() == 3);
  CHECK_THROWS_AS(edge_subgraph(tri, {7}, {}), std::invalid_argument);
}

TEST_CASE("self-loops rejected, ids stable") {
  MultiGraph g(2);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  EdgeId e0 = g.add_edge(0, 1);
  g.remove_edge(e0);
  EdgeId e1 = g.add_edge(0, 1);
  CHECK(e1 == e0 + 1);  // ids never reused
  CHECK_FALSE(g.has_edge(e0));
}

TEST_CASE("identify retargets copies and keeps ids") {
  // u and v both adjacent to w, plus a u-v copy that must vanish.
  MultiGraph g(3);
  EdgeId uw = g.add_edge(0, 2);
  EdgeId vw = g.add_edge(1, 2);
  EdgeId uv = g.add_edge(0, 1);
  VertexId merged = g.identify(0, 1);
  CHECK(merged == 3);
  CHECK_FALSE(g.has_edge(uv));
  CHECK(g.has_edge(uw));
  CHECK(g.has_edge(vw));
  CHECK(g.multiplicity(merged, 2) == 2);
  CHECK(g.num_vertices() == 2);
}

TEST_CASE("neighborhood_of_set disjoint from its argument") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 30; ++it) {
    MultiGraph g = random_connected_graph(rng(), 7, 6, true);
    std::vector<VertexId> s;
    for (VertexId v : g.vertices())
      if (rng() % 2) s.push_back(v);
    CHECK(set_intersection(neighborhood_of_set(g, s), s).empty());
  }
}
