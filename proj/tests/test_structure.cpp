#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

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

// Counts how many blocks contain both endpoints of every edge.
void check_blocks_cover_each_edge_once(const Graph& g, const BlockTree& bt) {
  for (auto [a, b] : g.edges()) {
    int hits = 0;
    for (const auto& block : bt.blocks) {
      const bool has_a = std::binary_search(block.begin(), block.end(), a);
      const bool has_b = std::binary_search(block.begin(), block.end(), b);
      if (has_a && has_b) ++hits;
    }
    CHECK(hits == 1);
  }
}

void check_ears_cover_each_edge_once(const Graph& g, const EarDecomposition& d) {
  std::set<std::pair<int, int>> covered;
  auto add = [&](int a, int b) {
    auto edge = std::minmax(a, b);
    CHECK(g.has_edge(a, b));
    CHECK(covered.insert({edge.first, edge.second}).second);
  };
  REQUIRE(!d.ears.empty());
  const auto& first = d.ears.front();
  REQUIRE(first.size() >= 3);
  for (std::size_t i = 0; i + 1 < first.size(); ++i) add(first[i], first[i + 1]);
  add(first.front(), first.back());

  std::set<int> placed(first.begin(), first.end());
  for (std::size_t e = 1; e < d.ears.size(); ++e) {
    const auto& ear = d.ears[e];
    REQUIRE(ear.size() >= 2);
    CHECK(placed.count(ear.front()) == 1);
    CHECK(placed.count(ear.back()) == 1);
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
      CHECK(placed.count(ear[i]) == 0);
      placed.insert(ear[i]);
    }
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) add(ear[i], ear[i + 1]);
  }
  CHECK(static_cast<int>(covered.size()) == g.edge_count());
  CHECK(static_cast<int>(placed.size()) == g.vertex_count());
}

}  // namespace

TEST_CASE("block decomposition of the standard families") {
  const BlockTree p = block_tree(path(5));
  CHECK(p.blocks.size() == 4);
  CHECK(p.cut_vertices == std::vector<int>{1, 2, 3});
  CHECK(p.is_path());

  const BlockTree s = block_tree(star(4));
  CHECK(s.blocks.size() == 3);
  CHECK(s.cut_vertices == std::vector<int>{0});
  CHECK_FALSE(s.is_path());

  const BlockTree c = block_tree(cycle(5));
  CHECK(c.blocks.size() == 1);
  CHECK(c.blocks[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(c.cut_vertices.empty());
  CHECK(c.is_path());

  const BlockTree k2 = block_tree(complete(2));
  CHECK(k2.blocks.size() == 1);
  CHECK(k2.cut_vertices.empty());

  // Two triangles sharing one vertex.
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const BlockTree b = block_tree(bowtie);
  CHECK(b.blocks.size() == 2);
  CHECK(b.cut_vertices == std::vector<int>{2});
  CHECK(b.is_path());
}

TEST_CASE("block nodes form a tree and blocks cover each edge once") {
  std::mt19937_64 rng(411);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 4 + static_cast<int>(rng() % 5);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Tree;
    Graph g = random_graph(kind, m, rng());
    const BlockTree bt = block_tree(g);
    check_blocks_cover_each_edge_once(g, bt);

    const auto adj = bt.node_adjacency();
    REQUIRE(static_cast<int>(adj.size()) == bt.node_count());
    int degree_sum = 0;
    for (const auto& row : adj) degree_sum += static_cast<int>(row.size());
    CHECK(degree_sum == 2 * (bt.node_count() - 1));  // tree edge count
    // Every tree edge joins a block node to a cut node carrying that vertex.
    const int nblocks = static_cast<int>(bt.blocks.size());
    for (int node = 0; node < nblocks; ++node)
      for (int other : adj[node]) {
        REQUIRE(other >= nblocks);
        const int cut = bt.cut_vertices[other - nblocks];
        CHECK(std::binary_search(bt.blocks[node].begin(), bt.blocks[node].end(), cut));
      }
  }
}

TEST_CASE("one block exactly when biconnected") {
  std::mt19937_64 rng(412);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 5);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Biconnected;
    Graph g = random_graph(kind, m, rng());
    CHECK((block_tree(g).blocks.size() == 1) == (naive::naive_vertex_connectivity(g) >= 2));
  }
}

TEST_CASE("ear decomposition covers biconnected graphs") {
  Graph c5 = cycle(5);
  const EarDecomposition whole = open_ear_decomposition(c5, {0, 1, 2, 3, 4});
  CHECK(whole.ears.size() == 1);
  check_ears_cover_each_edge_once(c5, whole);

  Graph k4 = complete(4);
  const EarDecomposition d = open_ear_decomposition(k4, {0, 1, 2});
  check_ears_cover_each_edge_once(k4, d);

  std::mt19937_64 rng(413);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 6);
    Graph g = random_graph(RandomGraphKind::Biconnected, m, rng());
    // Find any triangle-or-longer cycle to seed: walk the first bipolar pair.
    const auto order = bipolar_if_exists(g);
    REQUIRE(order.has_value());
    // Use a cycle through the first edge: shortest path between its endpoints
    // avoiding the edge itself, found by hand here.
    auto [a, b] = g.edges().front();
    std::vector<int> parent(m, -1), queue{a};
    std::vector<char> seen(m, 0);
    seen[a] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : g.neighbors(queue[i])) {
        if ((queue[i] == a && w == b) || seen[w]) continue;
        seen[w] = 1;
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
    REQUIRE(seen[b] == 1);
    std::vector<int> cyc;
    for (int v = b; v != -1; v = parent[v]) cyc.push_back(v);
    check_ears_cover_each_edge_once(g, open_ear_decomposition(g, cyc));
  }
}

TEST_CASE("ear decomposition rejects bad seeds") {
  CHECK_THROWS_AS(open_ear_decomposition(cycle(5), {0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(open_ear_decomposition(cycle(5), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(open_ear_decomposition(path(4), {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("bipolar order recognition") {
  Graph p3 = path(3);
  CHECK(is_bipolar_order(p3, {0, 1, 2}));
  CHECK(is_bipolar_order(p3, {2, 1, 0}));
  CHECK_FALSE(is_bipolar_order(p3, {1, 0, 2}));
  CHECK_FALSE(is_bipolar_order(p3, {0, 1}));
  CHECK_FALSE(is_bipolar_order(p3, {0, 1, 1}));
}

TEST_CASE("bipolar orders exist exactly when the block tree is a path") {
  CHECK(bipolar_if_exists(path(6)).has_value());
  CHECK(bipolar_if_exists(cycle(5)).has_value());
  CHECK_FALSE(bipolar_if_exists(star(4)).has_value());

  std::mt19937_64 rng(414);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 4);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Tree;
    Graph g = random_graph(kind, m, rng());
    const auto order = bipolar_if_exists(g);
    CHECK(order.has_value() == block_tree(g).is_path());
    CHECK(order.has_value() == naive::naive_bipolar_exists(g));
    if (order) {
      ++found;
      CHECK(naive::naive_is_bipolar(g, *order));
      // All prefixes and suffixes are connected in the library's view too.
      std::vector<int> prefix;
      for (int v : *order) {
        prefix.push_back(v);
        CHECK(is_connected_subset(g, prefix));
      }
    }
  }
  CHECK(found > 5);  // the sweep must exercise both outcomes
}

TEST_CASE("anchored bipolar orders run between the requested endpoints") {
  for (const Graph& g : {cycle(4), cycle(6), complete(4), make_fig3_l5().graph}) {
    const int m = g.vertex_count();
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        if (s == t) continue;
        const std::vector<int> order = bipolar_between(g, s, t);
        REQUIRE(static_cast<int>(order.size()) == m);
        CHECK(order.front() == s);
        CHECK(order.back() == t);
        CHECK(naive::naive_is_bipolar(g, order));
      }
  }
}

TEST_CASE("pairwise linkedness of the named graphs") {
  CHECK(is_ab_linked(complete(5), 2, 2));
  CHECK_FALSE(is_ab_linked(make_fig3_l5().graph, 2, 2));
  CHECK(is_ab_linked(cycle(5), 2, 1));
  CHECK_FALSE(is_ab_linked(path(4), 2, 1));
}

TEST_CASE("two-one linkedness is biconnectivity") {
  std::mt19937_64 rng(415);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 4);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Biconnected;
    Graph g = random_graph(kind, m, rng());
    CHECK(is_ab_linked(g, 2, 1) == (naive::naive_vertex_connectivity(g) >= 2));
  }
}

TEST_CASE("linkedness agrees with the definitional search") {
  std::mt19937_64 rng(416);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 4 + static_cast<int>(rng() % 3);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Biconnected;
    Graph g = random_graph(kind, m, rng());
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
      CHECK(is_ab_linked(g, a, b) == naive::naive_ab_linked(g, a, b));
    }
  }
}

TEST_CASE("linkedness enforces the search cap") {
  CHECK_THROWS_AS(is_ab_linked(path(search_caps().linked + 1), 2, 2), CapExceeded);
}
