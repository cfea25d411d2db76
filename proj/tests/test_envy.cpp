#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "graphfair/checkers.hpp"
#include "graphfair/envy.hpp"
#include "graphfair/instances.hpp"
#include "graphfair/oracles.hpp"
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

// All labeled connected graphs on m vertices, by edge subset enumeration.
std::vector<Graph> all_connected_graphs(int m) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) all.push_back({i, j});
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << all.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask & (std::uint32_t(1) << i)) edges.push_back(all[i]);
    Graph g(m, edges);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

// Sides of a complete bipartite graph: L is vertex 0's non-neighbors plus 0.
std::pair<std::vector<int>, std::vector<int>> sides(const Graph& g) {
  std::vector<int> left{0};
  std::vector<int> right = g.neighbors(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (!g.has_edge(0, v)) left.push_back(v);
  return {left, right};
}

}  // namespace

TEST_CASE("two agent split on an ordered path") {
  AdditiveValuation pair({1, 1});
  const Allocation even = ef1_two_on_bipolar({0, 1}, Valuation(pair), Valuation(pair));
  REQUIRE(even.bundles.size() == 2);
  CHECK(even.bundles[0].size() == 1);
  CHECK(even.bundles[1].size() == 1);
  const Instance even_inst{2, path(2), {pair, pair}};
  CHECK(is_ef(even_inst, even));

  AdditiveValuation mid({1, 2, 1});
  const Allocation split = ef1_two_on_bipolar({0, 1, 2}, Valuation(mid), Valuation(mid));
  const Instance mid_inst{2, path(3), {mid, mid}};
  REQUIRE(is_partition(mid_inst, split));
  CHECK(is_efk(mid_inst, split, 1));

  AdditiveValuation five({1, 1, 1, 1, 1});
  const auto order = bipolar_if_exists(cycle(5));
  REQUIRE(order.has_value());
  const Allocation c5 = ef1_two_on_bipolar(*order, Valuation(five), Valuation(five));
  const Instance c5_inst{2, cycle(5), {five, five}};
  REQUIRE(is_partition(c5_inst, c5));
  CHECK(is_efk(c5_inst, c5, 1));
  const auto size_pair = std::minmax(c5.bundles[0].size(), c5.bundles[1].size());
  CHECK(size_pair.first == 2);
  CHECK(size_pair.second == 3);
}

TEST_CASE("ordered prefix splits are envy free up to one good for monotone agents") {
  std::mt19937_64 rng(461);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const RandomGraphKind kind = m >= 3 && trial % 2 ? RandomGraphKind::Biconnected : RandomGraphKind::Path;
    Graph g = random_graph(kind, m, rng());
    const auto order = bipolar_if_exists(g);
    REQUIRE(order.has_value());
    std::vector<Valuation> us;
    for (int a = 0; a < 2; ++a) {
      if (trial % 3 == 0)
        us.push_back(random_monotone_table(m, 7, rng));
      else
        us.push_back(random_additive(m, 7, rng));
    }
    const Allocation alloc = ef1_two_on_bipolar(*order, us[0], us[1]);
    const Instance inst{2, g, us};
    REQUIRE(is_partition(inst, alloc));
    CHECK(is_connected_allocation(g, alloc));
    CHECK(is_efk(inst, alloc, 1));
  }
}

TEST_CASE("path shaped block trees need no merging") {
  for (const Graph& g : {path(5), cycle(6), path(2)}) {
    const EfkPlan plan = optimal_efk_two(g);
    CHECK(plan.k == 1);
    for (const auto& part : plan.merge_parts) CHECK(part.size() == 1);
  }
}

TEST_CASE("stars need all but one leaf merged") {
  for (int b = 3; b <= 6; ++b) {
    const EfkPlan plan = optimal_efk_two(star(b + 1));
    CHECK(plan.k == b - 1);
  }
}

TEST_CASE("merge plans stay within their own bound and admit an ordering") {
  std::mt19937_64 rng(462);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 5);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Tree;
    Graph g = random_graph(kind, m, rng());
    const EfkPlan plan = optimal_efk_two(g);
    std::vector<char> seen(m, 0);
    for (const auto& part : plan.merge_parts) {
      CHECK(static_cast<int>(part.size()) <= plan.k);
      CHECK(naive::connected_subset(g, part));
      for (int v : part) {
        CHECK(!seen[v]);
        seen[v] = 1;
      }
    }
    for (int v = 0; v < m; ++v) CHECK(seen[v]);
    const MergedGraph merged = merge_vertices(g, plan.merge_parts);
    CHECK(bipolar_if_exists(merged.graph).has_value());
  }
}

TEST_CASE("planned envy bound equals the enumerated guarantee") {
  // Everything on up to five vertices.
  for (int m = 2; m <= 5; ++m) {
    for (const Graph& g : all_connected_graphs(m)) {
      CHECK(optimal_efk_two(g).k == guaranteed_efk_bruteforce(g));
    }
  }
  // Random larger graphs.
  std::mt19937_64 rng(463);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 6 + static_cast<int>(rng() % 2);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Tree;
    Graph g = random_graph(kind, m, rng());
    CHECK(optimal_efk_two(g).k == guaranteed_efk_bruteforce(g));
  }
}

TEST_CASE("two agent allocation meets the planned bound") {
  // Paths stay within one good.
  std::mt19937_64 rng(464);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    Graph g = path(m);
    std::vector<Valuation> us{random_additive(m, 7, rng), random_additive(m, 7, rng)};
    const Instance inst{2, g, us};
    const EfkAllocation r = efk_two_allocate(inst);
    CHECK(r.k == 1);
    REQUIRE(is_partition(inst, r.allocation));
    CHECK(is_connected_allocation(g, r.allocation));
    CHECK(is_efk(inst, r.allocation, 1));
  }

  // The three leaf star with unit values: one agent ends two goods behind.
  AdditiveValuation ones({1, 1, 1, 1});
  const Instance k13{2, star(4), {ones, ones}};
  const EfkAllocation s = efk_two_allocate(k13);
  CHECK(s.k == 2);
  REQUIRE(is_partition(k13, s.allocation));
  CHECK(is_connected_allocation(k13.graph, s.allocation));
  CHECK(is_efk(k13, s.allocation, 2));
  CHECK_FALSE(is_efk(k13, s.allocation, 0));

  // Random graphs with mixed valuation kinds.
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 7);
    const RandomGraphKind kind = trial % 2 ? RandomGraphKind::Connected : RandomGraphKind::Tree;
    Graph g = random_graph(kind, m, rng());
    std::vector<Valuation> us;
    for (int a = 0; a < 2; ++a) {
      if (trial % 3 == 0)
        us.push_back(random_monotone_table(m, 7, rng));
      else
        us.push_back(random_additive(m, 7, rng));
    }
    const Instance inst{2, g, us};
    const EfkAllocation r = efk_two_allocate(inst);
    CHECK(r.k == optimal_efk_two(g).k);
    REQUIRE(is_partition(inst, r.allocation));
    CHECK(is_connected_allocation(g, r.allocation));
    CHECK(is_efk(inst, r.allocation, r.k));
  }
}

TEST_CASE("cycle elimination on balanced bipartite unit values") {
  const Graph g = complete_bipartite(3, 3);
  AdditiveValuation ones({1, 1, 1, 1, 1, 1});
  const Instance inst{3, g, std::vector<Valuation>(3, Valuation(ones))};
  const Allocation alloc = envy_cycle_bipartite(inst);
  REQUIRE(is_partition(inst, alloc));
  CHECK(is_connected_allocation(g, alloc));
  CHECK(is_efk(inst, alloc, 1));
  for (const auto& b : alloc.bundles) CHECK(b.size() == 2);
}

TEST_CASE("cycle elimination with nothing at stake is envy free") {
  const Graph g = complete_bipartite(2, 2);
  AdditiveValuation zero({0, 0, 0, 0});
  const Instance inst{2, g, std::vector<Valuation>(2, Valuation(zero))};
  const Allocation alloc = envy_cycle_bipartite(inst);
  REQUIRE(is_partition(inst, alloc));
  CHECK(is_ef(inst, alloc));
}

TEST_CASE("cycle elimination sweep stays connected and within one good") {
  std::mt19937_64 rng(465);
  for (int trial = 0; trial < 50; ++trial) {
    const int a = 2 + static_cast<int>(rng() % 3);
    const int b = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % (std::min(a, b) - 1));
    const Graph g = complete_bipartite(a, b);
    std::vector<Valuation> us;
    for (int i = 0; i < n; ++i) {
      if (trial % 2)
        us.push_back(random_monotone_table(a + b, 6, rng));
      else
        us.push_back(random_additive(a + b, 6, rng));
    }
    const Instance inst{n, g, us};
    std::vector<EnvyCycleStep> trace;
    const Allocation alloc = envy_cycle_bipartite(inst, &trace);
    REQUIRE(is_partition(inst, alloc));
    CHECK(is_connected_allocation(g, alloc));
    CHECK(is_efk(inst, alloc, 1));

    // Nobody ever stacks two left goods without a right good to join them.
    const auto [left, right] = sides(g);
    const std::set<int> lset(left.begin(), left.end());
    for (const EnvyCycleStep& step : trace) {
      for (const auto& bundle : step.bundles) {
        int nl = 0;
        int nr = 0;
        for (int v : bundle) (lset.count(v) ? nl : nr) += 1;
        if (nr == 0) CHECK(nl <= 1);
      }
    }
  }
}

TEST_CASE("cycle elimination rejects graphs outside its model") {
  AdditiveValuation u3({1, 1, 1});
  CHECK_THROWS_AS(envy_cycle_bipartite(Instance{2, cycle(3), {u3, u3}}), std::invalid_argument);
  AdditiveValuation u5({1, 1, 1, 1, 1});
  // K_{2,3} cannot seat three agents: the left side is too small.
  CHECK_THROWS_AS(envy_cycle_bipartite(Instance{3, complete_bipartite(2, 3), {u5, u5, u5}}),
                  std::invalid_argument);
}

TEST_CASE("double round robin trace on a two by two market") {
  const Graph g = complete_bipartite(2, 2);
  AdditiveValuation u({3, 1, 1, 3});
  const Instance inst{2, g, {u, u}};
  const Allocation alloc = double_round_robin(inst);
  // First agent grabs the heavy left good, second agent answers with the
  // heavy right good on the reversed pass.
  CHECK(alloc.bundles[0] == std::vector<int>{0, 2});
  CHECK(alloc.bundles[1] == std::vector<int>{1, 3});
  CHECK(is_ef(inst, alloc));
}

TEST_CASE("double round robin sweep holds its guarantees") {
  std::mt19937_64 rng(466);
  for (int trial = 0; trial < 60; ++trial) {
    const int a = 2 + static_cast<int>(rng() % 3);
    const int b = 2 + static_cast<int>(rng() % 3);
    const int n = 2;
    const Graph g = complete_bipartite(a, b);
    std::vector<Valuation> us;
    for (int i = 0; i < n; ++i) us.push_back(random_additive(a + b, 7, rng));
    const Instance inst{n, g, us};
    const Allocation alloc = double_round_robin(inst);
    REQUIRE(is_partition(inst, alloc));
    CHECK(is_connected_allocation(g, alloc));
    CHECK(is_efk(inst, alloc, 1));

    // Everyone holds at least one good from each side.
    const auto [left, right] = sides(g);
    const std::set<int> lset(left.begin(), left.end());
    for (const auto& bundle : alloc.bundles) {
      int nl = 0;
      int nr = 0;
      for (int v : bundle) (lset.count(v) ? nl : nr) += 1;
      CHECK(nl >= 1);
      CHECK(nr >= 1);
    }
  }

  // Identical agents on a balanced market: one left and one right good each.
  for (int n = 2; n <= 3; ++n) {
    const Graph g = complete_bipartite(n, n);
    AdditiveValuation u = random_additive(2 * n, 7, rng);
    const Instance inst{n, g, std::vector<Valuation>(n, Valuation(u))};
    const Allocation alloc = double_round_robin(inst);
    for (const auto& bundle : alloc.bundles) CHECK(bundle.size() == 2);
    CHECK(is_efk(inst, alloc, 1));
  }

  // Zero values are envy free outright.
  AdditiveValuation zero({0, 0, 0, 0});
  const Instance inst{2, complete_bipartite(2, 2), {zero, zero}};
  CHECK(is_ef(inst, double_round_robin(inst)));

  // Tabulated valuations are outside the contract.
  TabulatedValuation t(4, std::vector<Rational>(16, Rational(0)));
  const Instance tab{2, complete_bipartite(2, 2), {t, t}};
  CHECK_THROWS_AS(double_round_robin(tab), std::invalid_argument);
}
