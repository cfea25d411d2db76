#include "graphfair/instances.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graphfair/config.hpp"

namespace graphfair {

Instance identical_instance(Graph g, std::vector<Rational> values, int n) {
  if (n < 1) throw std::invalid_argument("identical_instance: needs agents");
  if (static_cast<int>(values.size()) != g.vertex_count()) {
    throw std::invalid_argument("identical_instance: one value per vertex required");
  }
  AdditiveValuation u(std::move(values));
  Instance inst{n, std::move(g), {}};
  inst.valuations.assign(n, Valuation(u));
  const std::vector<Violation> problems = validate(inst);
  if (!problems.empty()) {
    throw std::invalid_argument("identical_instance: " + problems.front().message);
  }
  return inst;
}

Instance make_fig2_wheel() {
  std::vector<std::pair<int, int>> edges = {{0, 4}, {1, 4}, {1, 5}, {2, 5},
                                            {2, 7}, {3, 7}, {3, 6}, {0, 6}};
  for (int v = 0; v < 8; ++v) edges.emplace_back(v, 8);
  return identical_instance(Graph(9, std::move(edges)),
                            {Rational(3), Rational(1), Rational(0), Rational(0), Rational(2),
                             Rational(0), Rational(2), Rational(0), Rational(0)},
                            2);
}

Instance make_fig3_l5() {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                            {1, 2}, {1, 4}, {2, 3}, {3, 4}};
  return identical_instance(Graph(5, std::move(edges)),
                            {Rational(0), Rational(2), Rational(1), Rational(2), Rational(3)}, 2);
}

Instance make_thm3_cut(int k) {
  if (k < 1) throw std::invalid_argument("make_thm3_cut: needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> values = {Rational(k)};
  for (int leaf = 1; leaf <= k; ++leaf) {
    edges.emplace_back(0, leaf);
    values.push_back(Rational(1));
  }
  return identical_instance(Graph(k + 1, std::move(edges)), std::move(values), 2);
}

Instance make_thm9_matching(int m) {
  if (m < 3) throw std::invalid_argument("make_thm9_matching: needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (a == 0 && b == 1) continue;
      edges.emplace_back(a, b);
    }
  }
  std::vector<Rational> values(m, Rational(1));
  values[0] = Rational(m - 2);
  values[1] = Rational(m - 2);
  values[2] = Rational(m - 1);
  return identical_instance(Graph(m, std::move(edges)), std::move(values), 2);
}

Instance make_thm12_star(int n, int m) {
  if (n < 2 || m < n) throw std::invalid_argument("make_thm12_star: needs 2 <= n <= m");
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 1; leaf < m; ++leaf) edges.emplace_back(0, leaf);
  std::vector<Rational> values(m, Rational(1));
  values[0] = Rational(m - n + 1);
  for (int leaf = 1; leaf <= n - 2; ++leaf) values[leaf] = Rational(m - n + 1);
  return identical_instance(Graph(m, std::move(edges)), std::move(values), n);
}

Instance make_thm16_path(int n, int m) {
  if (n < 2 || m < n) throw std::invalid_argument("make_thm16_path: needs 2 <= n <= m");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
  std::vector<Rational> values(m);
  if (m >= 2 * n - 1) {
    for (int i = 0; i < m; ++i) {
      if (i >= 2 * n - 1) {
        values[i] = Rational(0);
      } else {
        values[i] = i % 2 == 0 ? Rational(1) : Rational(n);
      }
    }
  } else {
    const int alternating = 2 * m - 2 * n + 1;
    for (int i = 0; i < m; ++i) {
      if (i >= alternating) {
        values[i] = Rational(m - n + 1);
      } else {
        values[i] = i % 2 == 0 ? Rational(1) : Rational(m - n + 1);
      }
    }
  }
  return identical_instance(Graph(m, std::move(edges)), std::move(values), n);
}

Instance make_prop7_pairs(const Graph& g, int a, int b, int c, int d) {
  const int m = g.vertex_count();
  const std::vector<int> picks = {a, b, c, d};
  for (int v : picks) {
    if (v < 0 || v >= m) throw std::invalid_argument("make_prop7_pairs: vertex out of range");
  }
  for (std::size_t i = 0; i < picks.size(); ++i) {
    for (std::size_t j = i + 1; j < picks.size(); ++j) {
      if (picks[i] == picks[j]) throw std::invalid_argument("make_prop7_pairs: vertices must be distinct");
    }
  }
  if (!g.is_connected()) throw std::invalid_argument("make_prop7_pairs: graph must be connected");
  std::vector<Rational> values(m, Rational(0));
  values[a] = Rational(2);
  values[b] = Rational(2);
  values[c] = Rational(3);
  values[d] = Rational(1);
  return identical_instance(g, std::move(values), 2);
}

namespace {

std::vector<char> connected_table_small(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<std::uint32_t> nb(m, 0);
  for (const auto& [a, b] : g.edges()) {
    nb[a] |= std::uint32_t{1} << b;
    nb[b] |= std::uint32_t{1} << a;
  }
  std::vector<char> connected(std::size_t{1} << m, 0);
  connected[0] = 1;
  for (std::uint32_t mask = 1; mask < connected.size(); ++mask) {
    std::uint32_t seen = mask & (~mask + 1);
    while (true) {
      std::uint32_t grow = seen;
      for (std::uint32_t scan = seen; scan != 0; scan &= scan - 1) {
        grow |= nb[std::countr_zero(scan)] & mask;
      }
      if (grow == seen) break;
      seen = grow;
    }
    connected[mask] = seen == mask ? 1 : 0;
  }
  return connected;
}

// Whether some connected bipartition puts all of m1 on one side and all of m2
// on the other.
bool separable(const std::vector<char>& connected, int m, std::uint32_t m1, std::uint32_t m2) {
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    if ((s & m1) != m1 || (s & m2) != 0) continue;
    if (connected[s] && connected[full ^ s]) return true;
  }
  return false;
}

}  // namespace

Instance make_prop9_linked(const Graph& g, int k) {
  const int m = g.vertex_count();
  if (k < 1) throw std::invalid_argument("make_prop9_linked: needs k >= 1");
  if (m < k + 2) throw std::invalid_argument("make_prop9_linked: graph too small for the pair sizes");
  if (!g.is_connected()) throw std::invalid_argument("make_prop9_linked: graph must be connected");
  if (m > search_caps().linked) {
    throw CapExceeded("make_prop9_linked: graph exceeds the linkedness cap");
  }
  const std::vector<char> connected = connected_table_small(g);

  // Lexicographically first pair (M1 of two vertices, M2 of k vertices) that
  // no connected bipartition separates.
  std::vector<int> m2(k);
  for (int v1 = 0; v1 < m; ++v1) {
    for (int v2 = v1 + 1; v2 < m; ++v2) {
      const std::uint32_t mask1 = (std::uint32_t{1} << v1) | (std::uint32_t{1} << v2);
      std::vector<int> pool;
      for (int v = 0; v < m; ++v) {
        if (v != v1 && v != v2) pool.push_back(v);
      }
      const int pool_size = static_cast<int>(pool.size());
      std::vector<int> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::uint32_t mask2 = 0;
        for (int i = 0; i < k; ++i) {
          m2[i] = pool[pick[i]];
          mask2 |= std::uint32_t{1} << m2[i];
        }
        if (!separable(connected, m, mask1, mask2)) {
          std::vector<Rational> values(m, Rational(0));
          values[v1] = Rational(k);
          values[v2] = Rational(k);
          values[m2[0]] = Rational(k + 1);
          for (int i = 1; i < k; ++i) values[m2[i]] = Rational(1);
          return identical_instance(g, std::move(values), 2);
        }
        int j = k - 1;
        while (j >= 0 && pick[j] == pool_size - k + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
  }
  throw std::invalid_argument("make_prop9_linked: every pair separates; the graph is (2,k)-linked");
}

Instance make_prop20_star(int m) {
  if (m < 3) throw std::invalid_argument("make_prop20_star: needs at least two leaves");
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 1; leaf < m; ++leaf) edges.emplace_back(0, leaf);
  return identical_instance(Graph(m, std::move(edges)), std::vector<Rational>(m, Rational(1)), 2);
}

Instance make_thm21_efx(const Graph& g) {
  const int m = g.vertex_count();
  if (!g.is_connected()) throw std::invalid_argument("make_thm21_efx: graph must be connected");
  int miss_a = -1;
  int miss_b = -1;
  for (int a = 0; a < m && miss_a < 0; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!g.has_edge(a, b)) {
        miss_a = a;
        miss_b = b;
        break;
      }
    }
  }
  if (miss_a < 0) throw std::invalid_argument("make_thm21_efx: graph is complete");
  int heavy = 0;
  while (heavy == miss_a || heavy == miss_b) ++heavy;
  std::vector<Rational> values(m, Rational(1, 2 * m));
  values[miss_a] = Rational(2);
  values[miss_b] = Rational(2);
  values[heavy] = Rational(3);
  return identical_instance(g, std::move(values), 2);
}

Instance make_fig6_tree() {
  return identical_instance(
      Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}}),
      {Rational(2), Rational(3), Rational(4), Rational(0), Rational(2), Rational(2)}, 3);
}

Instance make_thm22_deg4() {
  return identical_instance(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
                            std::vector<Rational>(5, Rational(1)), 3);
}

Instance make_fig7_k2b(int b) {
  if (b < 4) throw std::invalid_argument("make_fig7_k2b: needs at least four right vertices");
  std::vector<Rational> values = {Rational(2), Rational(2)};
  for (int i = 0; i < b; ++i) values.push_back(i < 4 ? Rational(1) : Rational(0));
  return identical_instance(complete_bipartite(2, b), std::move(values), 3);
}

namespace {

std::vector<int> random_permutation(int m, std::mt19937_64& rng) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = m - 1; i > 0; --i) {
    std::uniform_int_distribution<int> dist(0, i);
    std::swap(perm[i], perm[dist(rng)]);
  }
  return perm;
}

void add_edge_once(std::vector<std::pair<int, int>>& edges, int a, int b) {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges) {
    if (e.first == a && e.second == b) return;
  }
  edges.emplace_back(a, b);
}

}  // namespace

Graph random_graph(RandomGraphKind kind, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_graph: needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case RandomGraphKind::Path: {
      const std::vector<int> perm = random_permutation(m, rng);
      for (int i = 0; i + 1 < m; ++i) add_edge_once(edges, perm[i], perm[i + 1]);
      break;
    }
    case RandomGraphKind::Star: {
      if (m < 2) break;
      std::uniform_int_distribution<int> dist(0, m - 1);
      const int center = dist(rng);
      for (int v = 0; v < m; ++v) {
        if (v != center) add_edge_once(edges, center, v);
      }
      break;
    }
    case RandomGraphKind::Tree: {
      for (int v = 1; v < m; ++v) {
        std::uniform_int_distribution<int> dist(0, v - 1);
        add_edge_once(edges, dist(rng), v);
      }
      break;
    }
    case RandomGraphKind::Connected: {
      for (int v = 1; v < m; ++v) {
        std::uniform_int_distribution<int> dist(0, v - 1);
        add_edge_once(edges, dist(rng), v);
      }
      if (m >= 3) {
        std::uniform_int_distribution<int> count_dist(0, m);
        std::uniform_int_distribution<int> vertex_dist(0, m - 1);
        const int extra = count_dist(rng);
        for (int i = 0; i < extra; ++i) {
          const int a = vertex_dist(rng);
          const int b = vertex_dist(rng);
          if (a != b) add_edge_once(edges, a, b);
        }
      }
      break;
    }
    case RandomGraphKind::Biconnected: {
      if (m < 3) throw std::invalid_argument("random_graph: biconnected graphs need three vertices");
      const std::vector<int> perm = random_permutation(m, rng);
      std::uniform_int_distribution<int> len_dist(3, m);
      const int cycle_len = len_dist(rng);
      for (int i = 0; i < cycle_len; ++i) add_edge_once(edges, perm[i], perm[(i + 1) % cycle_len]);
      int placed = cycle_len;
      while (placed < m) {
        // Attach an ear of new vertices between two distinct placed vertices.
        std::uniform_int_distribution<int> size_dist(1, std::min(3, m - placed));
        const int ear = size_dist(rng);
        std::uniform_int_distribution<int> placed_dist(0, placed - 1);
        const int end1 = perm[placed_dist(rng)];
        int end2 = end1;
        while (end2 == end1) end2 = perm[placed_dist(rng)];
        int prev = end1;
        for (int i = 0; i < ear; ++i) {
          add_edge_once(edges, prev, perm[placed + i]);
          prev = perm[placed + i];
        }
        add_edge_once(edges, prev, end2);
        placed += ear;
      }
      std::uniform_int_distribution<int> extra_dist(0, m / 2);
      std::uniform_int_distribution<int> vertex_dist(0, m - 1);
      const int extra = extra_dist(rng);
      for (int i = 0; i < extra; ++i) {
        const int a = vertex_dist(rng);
        const int b = vertex_dist(rng);
        if (a != b) add_edge_once(edges, a, b);
      }
      break;
    }
  }
  return Graph(m, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: both sides need vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(a) * b);
  for (int l = 0; l < a; ++l) {
    for (int r = 0; r < b; ++r) edges.emplace_back(l, a + r);
  }
  return Graph(a + b, std::move(edges));
}

AdditiveValuation random_additive(int m, int max_value, std::mt19937_64& rng) {
  if (m < 1 || max_value < 0) throw std::invalid_argument("random_additive: bad sizes");
  std::uniform_int_distribution<int> dist(0, max_value);
  std::vector<Rational> values;
  values.reserve(m);
  for (int i = 0; i < m; ++i) values.emplace_back(dist(rng));
  return AdditiveValuation(std::move(values));
}

TabulatedValuation random_monotone_table(int m, int max_value, std::mt19937_64& rng) {
  if (m < 1 || max_value < 0) throw std::invalid_argument("random_monotone_table: bad sizes");
  std::uniform_int_distribution<int> dist(0, max_value);
  std::vector<Rational> table(std::size_t{1} << m, Rational(0));
  for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
    Rational v(dist(rng));
    for (std::uint32_t scan = mask; scan != 0; scan &= scan - 1) {
      const std::uint32_t sub = mask ^ (scan & (~scan + 1));
      v = std::max(v, table[sub]);
    }
    table[mask] = v;
  }
  return TabulatedValuation(m, std::move(table));
}

namespace {

int param_int(const std::map<std::string, std::string>& params, const std::string& key, int fallback,
              bool required) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (required) throw std::invalid_argument("missing parameter '" + key + "'");
    return fallback;
  }
  std::istringstream in(it->second);
  int value = 0;
  char extra = 0;
  if (!(in >> value) || in.get(extra)) {
    throw std::invalid_argument("parameter '" + key + "' is not an integer");
  }
  return value;
}

Graph param_graph(const std::map<std::string, std::string>& params) {
  auto it = params.find("graph");
  if (it == params.end()) throw std::invalid_argument("missing parameter 'graph'");
  const std::string& kind = it->second;
  if (kind == "kab") {
    return complete_bipartite(param_int(params, "a", 0, true), param_int(params, "b", 0, true));
  }
  const int m = param_int(params, "m", 0, true);
  if (kind == "path") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    return Graph(m, std::move(edges));
  }
  if (kind == "cycle") {
    if (m < 3) throw std::invalid_argument("a cycle needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, m - 1);
    return Graph(m, std::move(edges));
  }
  if (kind == "star") {
    if (m < 2) throw std::invalid_argument("a star needs at least two vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < m; ++v) edges.emplace_back(0, v);
    return Graph(m, std::move(edges));
  }
  if (kind == "complete") {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) edges.emplace_back(a, b);
    }
    return Graph(m, std::move(edges));
  }
  throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

}  // namespace

Instance make_catalog(const std::string& name, const std::map<std::string, std::string>& params) {
  if (name == "fig2_wheel") return make_fig2_wheel();
  if (name == "fig3_L5") return make_fig3_l5();
  if (name == "thm3_cut") return make_thm3_cut(param_int(params, "k", 0, true));
  if (name == "thm9_matching") return make_thm9_matching(param_int(params, "m", 0, true));
  if (name == "thm12_star") {
    return make_thm12_star(param_int(params, "n", 0, true), param_int(params, "m", 0, true));
  }
  if (name == "thm16_path") {
    return make_thm16_path(param_int(params, "n", 0, true), param_int(params, "m", 0, true));
  }
  if (name == "prop7_pairs") {
    return make_prop7_pairs(param_graph(params), param_int(params, "va", 0, true),
                            param_int(params, "vb", 0, true), param_int(params, "vc", 0, true),
                            param_int(params, "vd", 0, true));
  }
  if (name == "prop9_linked") {
    return make_prop9_linked(param_graph(params), param_int(params, "k", 0, true));
  }
  if (name == "prop20_star") return make_prop20_star(param_int(params, "m", 0, true));
  if (name == "thm21_efx") return make_thm21_efx(param_graph(params));
  if (name == "fig6_tree") return make_fig6_tree();
  if (name == "thm22_deg4") return make_thm22_deg4();
  if (name == "fig7_k2b") return make_fig7_k2b(param_int(params, "b", 0, true));
  throw std::invalid_argument("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {
      "fig2_wheel",
      "fig3_L5",
      "thm3_cut k=",
      "thm9_matching m=",
      "thm12_star n= m=",
      "thm16_path n= m=",
      "prop7_pairs graph= m= va= vb= vc= vd=",
      "prop9_linked graph= m= k=",
      "prop20_star m=",
      "thm21_efx graph= m=",
      "fig6_tree",
      "thm22_deg4",
      "fig7_k2b b=",
  };
}

}  // namespace graphfair
