#include "graphfair/envy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "graphfair/checkers.hpp"
#include "graphfair/config.hpp"

namespace graphfair {

Allocation ef1_two_on_bipolar(const std::vector<int>& order, const Valuation& u1, const Valuation& u2) {
  const int m = u1.goods();
  if (u2.goods() != m) throw std::invalid_argument("ef1_two_on_bipolar: valuation sizes differ");
  std::vector<char> seen(m, 0);
  if (static_cast<int>(order.size()) != m) {
    throw std::invalid_argument("ef1_two_on_bipolar: order must cover all goods");
  }
  for (int v : order) {
    if (v < 0 || v >= m || seen[v]) throw std::invalid_argument("ef1_two_on_bipolar: order is not a permutation");
    seen[v] = 1;
  }

  for (int cut = 0; cut <= m; ++cut) {
    std::vector<int> prefix(order.begin(), order.begin() + cut);
    std::vector<int> suffix(order.begin() + cut, order.end());
    std::sort(prefix.begin(), prefix.end());
    std::sort(suffix.begin(), suffix.end());
    if (envy_up_to(u1, prefix, suffix, 1) && envy_up_to(u2, suffix, prefix, 1)) {
      return Allocation{{prefix, suffix}};
    }
    if (envy_up_to(u1, suffix, prefix, 1) && envy_up_to(u2, prefix, suffix, 1)) {
      return Allocation{{suffix, prefix}};
    }
  }
  throw GuaranteeViolation("ef1_two_on_bipolar: no prefix cut was envy-free up to one good");
}

namespace {

// Tree path between two nodes of the block-cut tree.
std::vector<int> tree_node_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -2);
  parent[from] = -1;
  std::vector<int> queue = {from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    if (v == to) break;
    for (int w : adj[v]) {
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

EfkPlan optimal_efk_two(const Graph& g) {
  const int m = g.vertex_count();
  if (m == 1) return EfkPlan{1, {0}, {{0}}};
  const BlockTree bt = block_tree(g);
  const int block_count = static_cast<int>(bt.blocks.size());
  const std::vector<std::vector<int>> adj = bt.node_adjacency();
  const int node_count = bt.node_count();

  std::vector<int> leaves;
  for (int v = 0; v < node_count; ++v) {
    if (adj[v].size() <= 1) leaves.push_back(v);
  }

  struct Candidate {
    int k = 0;
    std::vector<int> path;
    std::vector<int> guardians;                    // cut vertices with dependents
    std::vector<std::vector<int>> hanging;         // dependents per guardian
  };
  bool have_best = false;
  Candidate best;

  for (std::size_t li = 0; li < leaves.size(); ++li) {
    for (std::size_t lj = li; lj < leaves.size(); ++lj) {
      if (li == lj && leaves.size() > 1) continue;  // single-leaf trees only
      const std::vector<int> path = tree_node_path(adj, leaves[li], leaves[lj]);
      std::vector<char> on_path(node_count, 0);
      for (int v : path) on_path[v] = 1;
      std::vector<char> in_path_vertices(m, 0);
      for (int v : path) {
        if (v < block_count) {
          for (int x : bt.blocks[v]) in_path_vertices[x] = 1;
        }
      }

      Candidate cand;
      cand.k = 1;
      cand.path = path;
      for (int ci = 0; ci < static_cast<int>(bt.cut_vertices.size()); ++ci) {
        const int node = block_count + ci;
        bool touches_path = false;
        for (int w : adj[node]) {
          if (w < block_count && on_path[w]) touches_path = true;
        }
        if (!touches_path) continue;

        // Walk away from the path to collect everything this cut vertex
        // guards. Off-path components of the tree attach to the path at a
        // single node, so the exploration never leaks back.
        std::vector<int> stack;
        std::vector<char> visited(node_count, 0);
        if (on_path[node]) {
          visited[node] = 1;
          for (int w : adj[node]) {
            if (!on_path[w]) stack.push_back(w);
          }
        } else {
          stack.push_back(node);
        }
        std::vector<char> hangs(m, 0);
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          if (visited[v]) continue;
          visited[v] = 1;
          if (v < block_count) {
            for (int x : bt.blocks[v]) {
              if (!in_path_vertices[x]) hangs[x] = 1;
            }
          }
          for (int w : adj[v]) {
            if (!visited[w] && !on_path[w]) stack.push_back(w);
          }
        }
        std::vector<int> dependents;
        for (int x = 0; x < m; ++x) {
          if (hangs[x]) dependents.push_back(x);
        }
        if (dependents.empty()) continue;
        cand.k = std::max(cand.k, 1 + static_cast<int>(dependents.size()));
        cand.guardians.push_back(bt.cut_vertices[ci]);
        cand.hanging.push_back(std::move(dependents));
      }

      if (!have_best || cand.k < best.k) {
        have_best = true;
        best = std::move(cand);
      }
    }
  }
  if (!have_best) throw GuaranteeViolation("optimal_efk_two: block tree produced no leaf path");

  EfkPlan plan;
  plan.k = best.k;
  plan.path_nodes = best.path;
  std::vector<int> part_of(m, -1);
  for (std::size_t gi = 0; gi < best.guardians.size(); ++gi) {
    std::vector<int> part = best.hanging[gi];
    part.push_back(best.guardians[gi]);
    std::sort(part.begin(), part.end());
    const int id = static_cast<int>(plan.merge_parts.size());
    for (int v : part) part_of[v] = id;
    plan.merge_parts.push_back(std::move(part));
  }
  std::vector<std::vector<int>> ordered;
  std::vector<char> emitted(plan.merge_parts.size(), 0);
  for (int v = 0; v < m; ++v) {
    if (part_of[v] < 0) {
      ordered.push_back({v});
    } else if (!emitted[part_of[v]]) {
      emitted[part_of[v]] = 1;
      ordered.push_back(plan.merge_parts[part_of[v]]);
    }
  }
  plan.merge_parts = std::move(ordered);
  return plan;
}

EfkAllocation efk_two_allocate(const Instance& inst) {
  if (inst.agents != 2) throw std::invalid_argument("efk_two_allocate: exactly two agents required");
  if (inst.valuations.size() != 2) {
    throw std::invalid_argument("efk_two_allocate: one valuation per agent required");
  }
  const Graph& g = inst.graph;
  if (!g.is_connected()) throw std::invalid_argument("efk_two_allocate: graph must be connected");

  const EfkPlan plan = optimal_efk_two(g);
  const MergedGraph merged = merge_vertices(g, plan.merge_parts);
  const int r = merged.graph.vertex_count();

  auto lift = [&](const Valuation& u) -> Valuation {
    if (const AdditiveValuation* add = u.additive()) {
      std::vector<Rational> values;
      values.reserve(r);
      for (const std::vector<int>& part : merged.parts) {
        Rational v(0);
        for (int x : part) v = v + add->value_of_good(x);
        values.push_back(v);
      }
      return AdditiveValuation(std::move(values));
    }
    std::vector<Rational> table(std::size_t{1} << r);
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
      std::uint32_t expanded = 0;
      for (int i = 0; i < r; ++i) {
        if ((mask >> i) & 1u) {
          for (int x : merged.parts[i]) expanded |= std::uint32_t{1} << x;
        }
      }
      table[mask] = u.value(expanded);
    }
    return TabulatedValuation(r, std::move(table));
  };
  const Valuation u1 = lift(inst.valuations[0]);
  const Valuation u2 = lift(inst.valuations[1]);

  const std::optional<std::vector<int>> order = bipolar_if_exists(merged.graph);
  if (!order) {
    throw GuaranteeViolation("efk_two_allocate: merged graph admits no bipolar ordering");
  }
  const Allocation merged_alloc = ef1_two_on_bipolar(*order, u1, u2);

  EfkAllocation result;
  result.k = plan.k;
  result.allocation.bundles.assign(2, {});
  for (int agent = 0; agent < 2; ++agent) {
    std::vector<int>& bundle = result.allocation.bundles[agent];
    for (int id : merged_alloc.bundles[agent]) {
      bundle.insert(bundle.end(), merged.parts[id].begin(), merged.parts[id].end());
    }
    std::sort(bundle.begin(), bundle.end());
  }
  return result;
}

namespace {

struct BipartiteSides {
  std::vector<int> left;   // the side containing vertex 0
  std::vector<int> right;
};

BipartiteSides split_complete_bipartite(const Graph& g, const char* who) {
  const int m = g.vertex_count();
  if (m < 2) throw std::invalid_argument(std::string(who) + ": graph is not complete bipartite");
  BipartiteSides sides;
  std::vector<char> is_right(m, 0);
  for (int w : g.neighbors(0)) is_right[w] = 1;
  for (int v = 0; v < m; ++v) {
    (is_right[v] ? sides.right : sides.left).push_back(v);
  }
  const std::size_t a = sides.left.size();
  const std::size_t b = sides.right.size();
  if (b == 0 || static_cast<std::size_t>(g.edge_count()) != a * b) {
    throw std::invalid_argument(std::string(who) + ": graph is not complete bipartite");
  }
  for (int v : sides.left) {
    if (static_cast<std::size_t>(g.degree(v)) != b) {
      throw std::invalid_argument(std::string(who) + ": graph is not complete bipartite");
    }
  }
  for (int v : sides.right) {
    if (static_cast<std::size_t>(g.degree(v)) != a) {
      throw std::invalid_argument(std::string(who) + ": graph is not complete bipartite");
    }
  }
  return sides;
}

// Lexicographically smallest simple cycle of the directed envy graph, or empty
// when the graph is acyclic. Agents count is small, so plain enumeration with
// the cycle's minimum fixed as the starting point is fine.
std::vector<int> smallest_envy_cycle(const std::vector<std::vector<char>>& envies) {
  const int n = static_cast<int>(envies.size());
  std::vector<int> best;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  auto extend = [&](auto&& self, int start, int v) -> void {
    for (int w = 0; w < n; ++w) {
      if (!envies[v][w]) continue;
      if (w == start && path.size() >= 2) {
        if (best.empty() || path < best) best = path;
      } else if (w > start && !on_path[w]) {
        path.push_back(w);
        on_path[w] = 1;
        self(self, start, w);
        on_path[w] = 0;
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path.assign(n, 0);
    on_path[s] = 1;
    extend(extend, s, s);
    if (!best.empty()) return best;  // cycles through smaller vertices win outright
  }
  return {};
}

}  // namespace

Allocation envy_cycle_bipartite(const Instance& inst, std::vector<EnvyCycleStep>* trace) {
  const int n = inst.agents;
  if (n < 1) throw std::invalid_argument("envy_cycle_bipartite: needs agents");
  if (static_cast<int>(inst.valuations.size()) != n) {
    throw std::invalid_argument("envy_cycle_bipartite: one valuation per agent required");
  }
  BipartiteSides sides = split_complete_bipartite(inst.graph, "envy_cycle_bipartite");
  if (static_cast<int>(sides.left.size()) < n || static_cast<int>(sides.right.size()) < n) {
    throw std::invalid_argument("envy_cycle_bipartite: both sides must have at least n vertices");
  }
  std::vector<char> on_right(inst.goods(), 0);
  for (int v : sides.right) on_right[v] = 1;

  std::vector<std::vector<int>> bundles(n);
  auto record = [&](int agent, int good, bool from_left) {
    if (trace != nullptr) trace->push_back(EnvyCycleStep{agent, good, from_left, bundles});
  };
  auto take_front = [](std::vector<int>& side) {
    const int good = side.front();
    side.erase(side.begin());
    return good;
  };
  auto give = [&](int agent, int good, bool from_left) {
    bundles[agent].push_back(good);
    std::sort(bundles[agent].begin(), bundles[agent].end());
    record(agent, good, from_left);
  };

  for (int i = 0; i < n; ++i) give(i, take_front(sides.left), true);

  std::vector<std::vector<char>> envies(n, std::vector<char>(n, 0));
  auto rebuild_envy = [&]() {
    for (int i = 0; i < n; ++i) {
      const Rational own = inst.valuations[i].value(bundles[i]);
      for (int j = 0; j < n; ++j) {
        envies[i][j] = (i != j && own < inst.valuations[i].value(bundles[j])) ? 1 : 0;
      }
    }
  };

  while (!sides.left.empty() || !sides.right.empty()) {
    rebuild_envy();
    while (true) {
      const std::vector<int> cycle = smallest_envy_cycle(envies);
      if (cycle.empty()) break;
      std::vector<int> first = bundles[cycle[0]];
      for (std::size_t idx = 0; idx + 1 < cycle.size(); ++idx) {
        bundles[cycle[idx]] = bundles[cycle[idx + 1]];
      }
      bundles[cycle.back()] = std::move(first);
      record(-1, -1, false);
      rebuild_envy();
    }

    int agent = -1;
    for (int i = 0; i < n && agent < 0; ++i) {
      bool envied = false;
      for (int j = 0; j < n; ++j) envied = envied || envies[j][i] != 0;
      if (!envied) agent = i;
    }
    if (agent < 0) throw GuaranteeViolation("envy_cycle_bipartite: no unenvied agent in an acyclic envy graph");

    bool holds_right = false;
    for (int v : bundles[agent]) holds_right = holds_right || on_right[v] != 0;
    if (holds_right) {
      if (!sides.left.empty()) {
        give(agent, take_front(sides.left), true);
      } else {
        give(agent, take_front(sides.right), false);
      }
    } else {
      if (!sides.right.empty()) {
        give(agent, take_front(sides.right), false);
      } else {
        give(agent, take_front(sides.left), true);
      }
    }
  }
  return Allocation{std::move(bundles)};
}

Allocation double_round_robin(const Instance& inst) {
  const int n = inst.agents;
  if (n < 1) throw std::invalid_argument("double_round_robin: needs agents");
  if (static_cast<int>(inst.valuations.size()) != n) {
    throw std::invalid_argument("double_round_robin: one valuation per agent required");
  }
  BipartiteSides sides = split_complete_bipartite(inst.graph, "double_round_robin");
  if (static_cast<int>(sides.left.size()) < n || static_cast<int>(sides.right.size()) < n) {
    throw std::invalid_argument("double_round_robin: both sides must have at least n vertices");
  }
  std::vector<const AdditiveValuation*> value_of(n);
  for (int i = 0; i < n; ++i) {
    const AdditiveValuation* add = inst.valuations[i].additive();
    if (!add) throw std::invalid_argument("double_round_robin: requires additive valuations");
    value_of[i] = add;
  }

  std::vector<std::vector<int>> bundles(n);
  auto take_favorite = [&](int agent, std::vector<int>& side) {
    std::size_t pick = 0;
    for (std::size_t idx = 1; idx < side.size(); ++idx) {
      if (value_of[agent]->value_of_good(side[idx]) > value_of[agent]->value_of_good(side[pick])) {
        pick = idx;
      }
    }
    bundles[agent].push_back(side[pick]);
    side.erase(side.begin() + pick);
  };

  int turn = 0;
  while (!sides.left.empty()) {
    take_favorite(turn, sides.left);
    turn = (turn + 1) % n;
  }
  turn = n - 1;
  while (!sides.right.empty()) {
    take_favorite(turn, sides.right);
    turn = (turn + n - 1) % n;
  }
  for (std::vector<int>& b : bundles) std::sort(b.begin(), b.end());
  return Allocation{std::move(bundles)};
}

}  // namespace graphfair
