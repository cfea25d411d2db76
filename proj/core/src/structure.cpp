#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

#include "graphfair/config.hpp"
#include "graphfair/graph.hpp"

namespace graphfair {

std::vector<std::vector<int>> BlockTree::node_adjacency() const {
  const int b = static_cast<int>(blocks.size());
  std::vector<std::vector<int>> adj(node_count());
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < static_cast<int>(cut_vertices.size()); ++j)
      if (std::binary_search(blocks[i].begin(), blocks[i].end(), cut_vertices[j])) {
        adj[i].push_back(b + j);
        adj[b + j].push_back(i);
      }
  return adj;
}

bool BlockTree::is_path() const {
  if (node_count() <= 1) return true;
  for (const auto& nbrs : node_adjacency())
    if (nbrs.size() > 2) return false;
  return true;
}

BlockTree block_tree(const Graph& g) {
  const int m = g.vertex_count();
  if (m < 1) throw std::invalid_argument("block_tree: empty graph");
  if (!g.is_connected()) throw std::invalid_argument("block_tree: graph is disconnected");
  BlockTree bt;
  if (m == 1) {
    bt.blocks = {{0}};
    return bt;
  }

  // Lowpoint depth-first search with an edge stack; popping at an articulation
  // boundary yields one biconnected component.
  std::vector<int> disc(m, 0), low(m, 0), parent(m, -1);
  std::vector<char> is_cut(m, 0);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  std::function<void(int)> dfs = [&](int u) {
    disc[u] = low[u] = ++timer;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (disc[v] == 0) {
        parent[v] = u;
        ++children;
        edge_stack.push_back({u, v});
        dfs(v);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent[u] != -1 || children > 1) is_cut[u] = 1;
          std::vector<int> verts;
          while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v) break;
          }
          std::sort(verts.begin(), verts.end());
          verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
          bt.blocks.push_back(std::move(verts));
        }
      } else if (v != parent[u] && disc[v] < disc[u]) {
        edge_stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(0);

  std::sort(bt.blocks.begin(), bt.blocks.end());
  for (int v = 0; v < m; ++v)
    if (is_cut[v]) bt.cut_vertices.push_back(v);
  return bt;
}

namespace {

bool is_biconnected(const Graph& g) {
  if (g.vertex_count() < 3) return false;
  if (!g.is_connected()) return false;
  return block_tree(g).blocks.size() == 1;
}

void check_cycle_of(const Graph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("first_cycle: a cycle needs at least three vertices");
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("first_cycle: repeated vertex");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i];
    int b = cycle[(i + 1) % cycle.size()];
    if (!g.has_edge(a, b)) throw std::invalid_argument("first_cycle: not a cycle of the graph");
  }
}

}  // namespace

EarDecomposition open_ear_decomposition(const Graph& g, const std::vector<int>& first_cycle) {
  if (!is_biconnected(g)) throw std::invalid_argument("open_ear_decomposition: graph is not biconnected");
  check_cycle_of(g, first_cycle);
  const int m = g.vertex_count();

  std::map<std::pair<int, int>, char> used;
  auto mark = [&](int a, int b) { used[{std::min(a, b), std::max(a, b)}] = 1; };
  auto is_used = [&](int a, int b) {
    auto it = used.find({std::min(a, b), std::max(a, b)});
    return it != used.end();
  };

  std::vector<char> covered(m, 0);
  for (int v : first_cycle) covered[v] = 1;
  for (std::size_t i = 0; i < first_cycle.size(); ++i)
    mark(first_cycle[i], first_cycle[(i + 1) % first_cycle.size()]);

  EarDecomposition result;
  result.ears.push_back(first_cycle);

  std::size_t used_count = first_cycle.size();
  while (used_count < g.edges().size()) {
    // Lowest unused edge with a covered endpoint. One always exists while
    // uncovered edges remain: covered vertices induce all used edges, and the
    // graph is connected.
    int eu = -1, ex = -1;
    for (auto [a, b] : g.edges()) {
      if (is_used(a, b)) continue;
      if (covered[a] || covered[b]) {
        eu = a;
        ex = b;
        break;
      }
    }
    if (eu < 0) throw GuaranteeViolation("open_ear_decomposition: no extendable edge found");
    if (covered[eu] && covered[ex]) {
      mark(eu, ex);
      ++used_count;
      result.ears.push_back({eu, ex});
      continue;
    }
    if (!covered[eu]) std::swap(eu, ex);  // eu covered, ex new

    // Shortest path from ex back to a covered vertex other than eu, staying
    // outside both eu and the covered set until the final step. Exists since
    // g minus eu is connected.
    std::vector<int> pred(m, -2);
    std::queue<int> q;
    q.push(ex);
    pred[ex] = -1;
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (v == eu || pred[v] != -2) continue;
        pred[v] = u;
        if (covered[v]) {
          hit = v;
          break;
        }
        q.push(v);
      }
    }
    if (hit < 0) throw GuaranteeViolation("open_ear_decomposition: lost connectivity");

    std::vector<int> ear;
    for (int v = hit; v != -1; v = pred[v]) ear.push_back(v);
    ear.push_back(eu);
    std::reverse(ear.begin(), ear.end());  // eu, ex, ..., hit
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      mark(ear[i], ear[i + 1]);
      ++used_count;
    }
    for (int v : ear) covered[v] = 1;
    result.ears.push_back(std::move(ear));
  }
  return result;
}

bool is_bipolar_order(const Graph& g, const std::vector<int>& order) {
  const int m = g.vertex_count();
  if (static_cast<int>(order.size()) != m) return false;
  std::vector<char> seen(m, 0);
  for (int v : order) {
    if (v < 0 || v >= m || seen[v]) return false;
    seen[v] = 1;
  }
  // A prefix chain is connected iff each vertex after the first attaches to an
  // earlier one; symmetrically for suffixes.
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  for (int i = 1; i < m; ++i) {
    bool earlier = false;
    for (int w : g.neighbors(order[i]))
      if (pos[w] < i) {
        earlier = true;
        break;
      }
    if (!earlier) return false;
  }
  for (int i = 0; i + 1 < m; ++i) {
    bool later = false;
    for (int w : g.neighbors(order[i]))
      if (pos[w] > i) {
        later = true;
        break;
      }
    if (!later) return false;
  }
  return true;
}

namespace {

// Two internally vertex-disjoint paths between g1 and g2, found by two rounds
// of shortest-path flow augmentation on the split graph. Both exist in a
// biconnected graph.
std::pair<std::vector<int>, std::vector<int>> two_disjoint_paths(const Graph& g, int g1, int g2) {
  const int m = g.vertex_count();
  struct Arc {
    int to, rev, cap;
    bool forward;
  };
  std::vector<std::vector<Arc>> arcs(2 * m);
  auto add = [&](int from, int to) {
    arcs[from].push_back({to, static_cast<int>(arcs[to].size()), 1, true});
    arcs[to].push_back({from, static_cast<int>(arcs[from].size()) - 1, 0, false});
  };
  for (int v = 0; v < m; ++v) add(2 * v, 2 * v + 1);
  for (auto [a, b] : g.edges()) {
    add(2 * a + 1, 2 * b);
    add(2 * b + 1, 2 * a);
  }
  const int source = 2 * g1 + 1;
  const int sink = 2 * g2;
  for (int round = 0; round < 2; ++round) {
    std::vector<std::pair<int, int>> pred(2 * m, {-1, -1});
    std::vector<char> seen(2 * m, 0);
    std::queue<int> q;
    q.push(source);
    seen[source] = 1;
    while (!q.empty() && !seen[sink]) {
      int u = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i)
        if (arcs[u][i].cap > 0 && !seen[arcs[u][i].to]) {
          seen[arcs[u][i].to] = 1;
          pred[arcs[u][i].to] = {u, i};
          q.push(arcs[u][i].to);
        }
    }
    if (!seen[sink])
      throw GuaranteeViolation("bipolar_between: fewer than two disjoint paths; graph not biconnected?");
    for (int v = sink; v != source;) {
      auto [u, i] = pred[v];
      arcs[u][i].cap -= 1;
      arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
      v = u;
    }
  }
  // Decode the two unit paths by walking saturated forward arcs.
  std::vector<std::vector<char>> taken(2 * m);
  for (int u = 0; u < 2 * m; ++u) taken[u].assign(arcs[u].size(), 0);
  std::pair<std::vector<int>, std::vector<int>> paths;
  for (int round = 0; round < 2; ++round) {
    std::vector<int>& path = round == 0 ? paths.first : paths.second;
    path.push_back(g1);
    int u = source;
    while (u != sink) {
      bool advanced = false;
      for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
        const Arc& a = arcs[u][i];
        // A forward arc carries one unit iff its capacity was consumed.
        if (!a.forward || a.cap != 0 || taken[u][i]) continue;
        taken[u][i] = 1;
        u = a.to;
        advanced = true;
        break;
      }
      if (!advanced) throw GuaranteeViolation("bipolar_between: flow decomposition failed");
      if (u % 2 == 0 && u != source) path.push_back(u / 2);
    }
  }
  return paths;
}

}  // namespace

std::vector<int> bipolar_between(const Graph& g, int g1, int g2) {
  const int m = g.vertex_count();
  if (g1 < 0 || g2 < 0 || g1 >= m || g2 >= m || g1 == g2)
    throw std::invalid_argument("bipolar_between: invalid endpoints");
  if (!is_biconnected(g)) throw std::invalid_argument("bipolar_between: graph is not biconnected");

  auto [p1, p2] = two_disjoint_paths(g, g1, g2);
  // Cycle through g1 and g2: forward along p1, back along p2.
  std::vector<int> cycle = p1;
  for (std::size_t i = p2.size() - 2; i >= 1; --i) cycle.push_back(p2[i]);

  EarDecomposition ears = open_ear_decomposition(g, cycle);

  // First ear g1, h_1..h_i, g2, h_{i+1}..h_j opens up as
  // g1, h_1..h_i, h_j, h_{j-1}, .., h_{i+1}, g2.
  std::size_t p = 0;
  while (cycle[p] != g2) ++p;
  std::vector<int> order;
  order.reserve(m);
  for (std::size_t i = 0; i < p; ++i) order.push_back(cycle[i]);
  for (std::size_t i = cycle.size() - 1; i > p; --i) order.push_back(cycle[i]);
  order.push_back(g2);

  // Each later ear inserts its interior directly after the endpoint that comes
  // first in the current order, in path order from that endpoint.
  std::vector<int> pos(m, -1);
  auto reindex = [&]() {
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  };
  reindex();
  for (std::size_t e = 1; e < ears.ears.size(); ++e) {
    const std::vector<int>& ear = ears.ears[e];
    if (ear.size() <= 2) continue;  // no interior vertices
    std::vector<int> interior(ear.begin() + 1, ear.end() - 1);
    int head = ear.front(), tail = ear.back();
    if (pos[head] > pos[tail]) {
      std::swap(head, tail);
      std::reverse(interior.begin(), interior.end());
    }
    order.insert(order.begin() + pos[head] + 1, interior.begin(), interior.end());
    reindex();
  }

  if (!is_bipolar_order(g, order))
    throw GuaranteeViolation("bipolar_between: constructed order is not bipolar");
  return order;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts, std::vector<int>& back) {
  back = verts;  // verts sorted
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (local[a] >= 0 && local[b] >= 0) edges.push_back({local[a], local[b]});
  return Graph(static_cast<int>(verts.size()), std::move(edges));
}

// Bipolar ordering of one block from vertex `from` to vertex `to` (original
// vertex ids; either may be -1 meaning "pick the lowest vertex distinct from
// the other endpoint").
std::vector<int> block_order(const Graph& g, const std::vector<int>& block, int from, int to) {
  if (from < 0)
    for (int v : block)
      if (v != to) {
        from = v;
        break;
      }
  if (to < 0)
    for (int v : block)
      if (v != from) {
        to = v;
        break;
      }
  if (block.size() == 2) return {from, to};
  std::vector<int> back;
  Graph sub = induced_subgraph(g, block, back);
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < back.size(); ++i) local[back[i]] = static_cast<int>(i);
  std::vector<int> sub_order = bipolar_between(sub, local[from], local[to]);
  std::vector<int> order;
  order.reserve(sub_order.size());
  for (int v : sub_order) order.push_back(back[v]);
  return order;
}

}  // namespace

std::optional<std::vector<int>> bipolar_if_exists(const Graph& g) {
  const int m = g.vertex_count();
  if (m < 1) throw std::invalid_argument("bipolar_if_exists: empty graph");
  if (!g.is_connected()) throw std::invalid_argument("bipolar_if_exists: graph is disconnected");
  if (m == 1) return std::vector<int>{0};
  if (m == 2) return std::vector<int>{0, 1};

  BlockTree bt = block_tree(g);
  if (!bt.is_path()) return std::nullopt;

  std::vector<int> order;
  if (bt.blocks.size() == 1) {
    order = bipolar_between(g, 0, 1);
  } else {
    // Walk the block path end to end, stitching per-block orderings at the cut
    // vertices. The free endpoints of the terminal blocks avoid their cuts.
    auto adj = bt.node_adjacency();
    const int b = static_cast<int>(bt.blocks.size());
    int start = -1;
    for (int i = 0; i < b; ++i)
      if (adj[i].size() == 1 && (start < 0 || bt.blocks[i] < bt.blocks[start])) start = i;

    std::vector<int> node_path;
    int prev = -1, cur = start;
    while (true) {
      node_path.push_back(cur);
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }

    for (std::size_t i = 0; i < node_path.size(); i += 2) {
      const std::vector<int>& block = bt.blocks[node_path[i]];
      int entry = i == 0 ? -1 : bt.cut_vertices[node_path[i - 1] - b];
      int exit = i + 1 == node_path.size() ? -1 : bt.cut_vertices[node_path[i + 1] - b];
      std::vector<int> piece = block_order(g, block, entry, exit);
      if (!order.empty()) piece.erase(piece.begin());  // entry cut already placed
      order.insert(order.end(), piece.begin(), piece.end());
    }
  }

  if (!is_bipolar_order(g, order))
    throw GuaranteeViolation("bipolar_if_exists: constructed order is not bipolar");
  return order;
}

namespace {

// Connectivity lookup for all vertex subsets, mask-indexed.
std::vector<char> connected_subset_table(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<std::uint32_t> nbr(m, 0);
  for (auto [a, b] : g.edges()) {
    nbr[a] |= 1u << b;
    nbr[b] |= 1u << a;
  }
  std::vector<char> table(std::size_t(1) << m, 0);
  table[0] = 1;
  for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
    std::uint32_t start = mask & (~mask + 1);
    std::uint32_t reach = start;
    while (true) {
      std::uint32_t grow = reach;
      std::uint32_t rest = reach;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        grow |= nbr[v] & mask;
      }
      if (grow == reach) break;
      reach = grow;
    }
    table[mask] = reach == mask;
  }
  return table;
}

}  // namespace

bool is_ab_linked(const Graph& g, int a, int b) {
  const int m = g.vertex_count();
  if (a < 1 || b < 1 || a + b > m) throw std::invalid_argument("is_ab_linked: need 1 <= a, 1 <= b, a + b <= m");
  if (!g.is_connected()) throw std::invalid_argument("is_ab_linked: graph is disconnected");
  if (m > search_caps().linked)
    throw CapExceeded("is_ab_linked: vertex count exceeds the exhaustive cap");

  std::vector<char> connected = connected_subset_table(g);
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;

  // Disjoint connected supersets of (M1, M2) exist iff some connected
  // bipartition of the whole vertex set separates M1 from M2: grow the two
  // parts greedily along edges until everything is absorbed.
  std::vector<std::uint32_t> splits;
  for (std::uint32_t t = 1; t < full; ++t) {
    if (!(t & 1u)) continue;  // fix vertex 0 on the first side
    if (connected[t] && connected[full & ~t]) splits.push_back(t);
  }

  std::vector<int> m1(a), m2(b);
  std::function<bool(int, int, std::uint32_t)> pick2 = [&](int idx, int lo, std::uint32_t mask1) {
    if (idx == b) {
      std::uint32_t mask2 = 0;
      for (int v : m2) mask2 |= 1u << v;
      for (std::uint32_t t : splits) {
        std::uint32_t c = full & ~t;
        if (((mask1 & t) == mask1 && (mask2 & c) == mask2) ||
            ((mask2 & t) == mask2 && (mask1 & c) == mask1))
          return true;
      }
      return false;
    }
    for (int v = lo; v < m; ++v) {
      if (mask1 & (1u << v)) continue;
      m2[idx] = v;
      if (!pick2(idx + 1, v + 1, mask1)) return false;
    }
    return true;
  };
  std::function<bool(int, int)> pick1 = [&](int idx, int lo) {
    if (idx == a) {
      std::uint32_t mask1 = 0;
      for (int v : m1) mask1 |= 1u << v;
      return pick2(0, 0, mask1);
    }
    for (int v = lo; v < m; ++v) {
      m1[idx] = v;
      if (!pick1(idx + 1, v + 1)) return false;
    }
    return true;
  };
  return pick1(0, 0);
}

}  // namespace graphfair
