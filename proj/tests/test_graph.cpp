#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "graphfair/config.hpp"
#include "graphfair/graph.hpp"
#include "graphfair/instances.hpp"
#include "naive.hpp"

using namespace graphfair;

namespace {

Graph path(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < m; ++i) e.push_back({i, i + 1});
  return Graph(m, e);
}

Graph cycle(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < m; ++i) e.push_back({i, i + 1});
  e.push_back({0, m - 1});
  return Graph(m, e);
}

Graph star(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < m; ++i) e.push_back({0, i});
  return Graph(m, e);
}

Graph complete(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) e.push_back({i, j});
  return Graph(m, e);
}

}  // namespace

TEST_CASE("construction rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("edges are normalized and neighbors sorted") {
  Graph g(4, {{2, 1}, {3, 0}, {0, 1}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(g.neighbors(0) == std::vector<int>{1, 3});
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("shape predicates") {
  CHECK(path(5).is_connected());
  CHECK(path(5).is_tree());
  CHECK(path(5).is_path_graph());
  CHECK_FALSE(path(5).is_complete());

  CHECK(cycle(4).is_connected());
  CHECK_FALSE(cycle(4).is_tree());
  CHECK_FALSE(cycle(4).is_path_graph());

  CHECK(star(5).is_tree());
  CHECK_FALSE(star(5).is_path_graph());

  CHECK(complete(3).is_complete());
  CHECK(complete(2).is_path_graph());
  CHECK(Graph(1, {}).is_connected());
  CHECK(Graph(1, {}).is_tree());

  Graph forest(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(forest.is_connected());
  CHECK_FALSE(forest.is_tree());
}

TEST_CASE("induced subset connectivity") {
  Graph g = path(3);
  CHECK(is_connected_subset(g, {}));
  CHECK(is_connected_subset(g, {1}));
  CHECK(is_connected_subset(g, {0, 1}));
  CHECK(is_connected_subset(g, {0, 1, 2}));
  CHECK_FALSE(is_connected_subset(g, {0, 2}));
}

TEST_CASE("subset connectivity agrees with reference search on random graphs") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 4 + static_cast<int>(rng() % 4);
    Graph g = random_graph(RandomGraphKind::Connected, m, rng());
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
      const std::vector<int> vs = naive::mask_to_bundle(mask);
      CHECK(is_connected_subset(g, vs) == naive::connected_subset(g, vs));
    }
  }
}

TEST_CASE("vertex connectivity of the standard families") {
  CHECK(vertex_connectivity(path(5)) == 1);
  CHECK(vertex_connectivity(star(5)) == 1);
  CHECK(vertex_connectivity(cycle(5)) == 2);
  CHECK(vertex_connectivity(complete(5)) == 4);
  CHECK(vertex_connectivity(complete(2)) == 1);
}

TEST_CASE("vertex connectivity of the five-vertex near-complete graph is three") {
  const Graph& l5 = make_fig3_l5().graph;
  CHECK(l5.vertex_count() == 5);
  CHECK(l5.edge_count() == 8);
  CHECK(vertex_connectivity(l5) == 3);
}

TEST_CASE("vertex connectivity matches exhaustive deletion on random graphs") {
  std::mt19937_64 rng(402);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 4 + static_cast<int>(rng() % 4);
    const RandomGraphKind kind =
        trial % 3 == 0 ? RandomGraphKind::Tree
                       : (trial % 3 == 1 ? RandomGraphKind::Connected : RandomGraphKind::Biconnected);
    Graph g = random_graph(kind, m, rng());
    CHECK(vertex_connectivity(g) == naive::naive_vertex_connectivity(g));
  }
}

TEST_CASE("single deletion witness") {
  const DeletionWitness p = max_components_single_deletion(path(5));
  CHECK(p.components == 2);
  CHECK(p.vertex == 1);

  const DeletionWitness s = max_components_single_deletion(star(5));
  CHECK(s.components == 4);
  CHECK(s.vertex == 0);

  const DeletionWitness c = max_components_single_deletion(cycle(5));
  CHECK(c.components == 1);
  CHECK(c.vertex == 0);

  CHECK(max_components_single_deletion(complete(2)).components == 1);
}

TEST_CASE("merging parts contracts the graph") {
  Graph p3 = path(3);
  const MergedGraph identity = merge_vertices(p3, {{0}, {1}, {2}});
  CHECK(identity.graph.vertex_count() == 3);
  CHECK(identity.graph.edges() == p3.edges());

  const MergedGraph two = merge_vertices(p3, {{0, 1}, {2}});
  CHECK(two.graph.vertex_count() == 2);
  CHECK(two.graph.edge_count() == 1);
  CHECK(two.parts == std::vector<std::vector<int>>{{0, 1}, {2}});

  // Parallel cross edges collapse to one.
  Graph c4 = cycle(4);
  const MergedGraph halves = merge_vertices(c4, {{0, 1}, {2, 3}});
  CHECK(halves.graph.vertex_count() == 2);
  CHECK(halves.graph.edge_count() == 1);
}

TEST_CASE("merging rejects invalid partitions") {
  Graph p3 = path(3);
  CHECK_THROWS_AS(merge_vertices(p3, {{0, 2}, {1}}), std::invalid_argument);  // disconnected part
  CHECK_THROWS_AS(merge_vertices(p3, {{0, 1}}), std::invalid_argument);       // does not cover
  CHECK_THROWS_AS(merge_vertices(p3, {{0, 1}, {1, 2}}), std::invalid_argument);  // overlap
}

TEST_CASE("merged subsets expand to connected originals") {
  std::mt19937_64 rng(403);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(RandomGraphKind::Connected, m, rng());
    // Grow one random connected part from a seed vertex, keep the rest single.
    std::vector<char> used(m, 0);
    std::vector<int> part{static_cast<int>(rng() % m)};
    used[part[0]] = 1;
    for (int grow = 0; grow < 2; ++grow) {
      std::vector<int> frontier;
      for (int v : part)
        for (int w : g.neighbors(v))
          if (!used[w]) frontier.push_back(w);
      if (frontier.empty()) break;
      const int pick = frontier[rng() % frontier.size()];
      used[pick] = 1;
      part.push_back(pick);
    }
    std::sort(part.begin(), part.end());
    std::vector<std::vector<int>> parts{part};
    for (int v = 0; v < m; ++v)
      if (!used[v]) parts.push_back({v});
    const MergedGraph merged = merge_vertices(g, parts);
    REQUIRE(merged.graph.is_connected());
    // Any connected merged pair expands to a connected original set.
    for (auto [a, b] : merged.graph.edges()) {
      std::vector<int> expanded = merged.parts[a];
      expanded.insert(expanded.end(), merged.parts[b].begin(), merged.parts[b].end());
      CHECK(naive::connected_subset(g, expanded));
    }
  }
}
