#include "graphfair/mms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphfair/config.hpp"
#include "graphfair/oracles.hpp"

namespace graphfair {

Rational ips_threshold(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("ips_threshold: bad sizes");
  if (m < n) return Rational(0);
  if (m >= 2 * n - 1) return Rational(1, n);
  return Rational(1, m - n + 1);
}

std::optional<IpsCertificate> is_ips_bundle(const AdditiveValuation& u, const std::vector<int>& bundle,
                                            int n, int agent) {
  const int m = u.goods();
  if (n < 1) throw std::invalid_argument("is_ips_bundle: needs at least one agent");
  std::vector<char> inside(m, 0);
  for (int g : bundle) {
    if (g < 0 || g >= m) throw std::invalid_argument("is_ips_bundle: good out of range");
    if (inside[g]) throw std::invalid_argument("is_ips_bundle: repeated good");
    inside[g] = 1;
  }
  std::vector<int> outside;
  outside.reserve(m - bundle.size());
  for (int g = 0; g < m; ++g) {
    if (!inside[g]) outside.push_back(g);
  }
  // The threshold scales u(M \ B); discarding the n-1 most valuable outside
  // goods minimizes it, so only that B needs testing.
  std::stable_sort(outside.begin(), outside.end(),
                   [&](int a, int b) { return u.value_of_good(a) > u.value_of_good(b); });
  const int take = std::min<int>(n - 1, static_cast<int>(outside.size()));
  std::vector<int> removed(outside.begin(), outside.begin() + take);
  std::sort(removed.begin(), removed.end());

  const Rational threshold = ips_threshold(n, m);
  Rational rest = u.total();
  for (int g : removed) rest = rest - u.value_of_good(g);
  if (u.value(bundle) < threshold * rest) return std::nullopt;
  IpsCertificate cert;
  cert.agent = agent;
  cert.removed = std::move(removed);
  cert.threshold = threshold;
  return cert;
}

namespace {

std::vector<int> path_order(const Graph& g) {
  const int m = g.vertex_count();
  if (m == 1) return {0};
  int start = -1;
  for (int v = 0; v < m; ++v) {
    if (g.degree(v) == 1) {
      start = v;
      break;
    }
  }
  std::vector<int> order;
  order.reserve(m);
  int prev = -1;
  int cur = start;
  while (true) {
    order.push_back(cur);
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  return order;
}

const AdditiveValuation& additive_or_throw(const Valuation& u, const char* who) {
  const AdditiveValuation* add = u.additive();
  if (!add) throw std::invalid_argument(std::string(who) + ": requires additive valuations");
  return *add;
}

}  // namespace

PathIpsResult allocate_path_ips(const Instance& inst) {
  if (!inst.graph.is_path_graph()) throw std::invalid_argument("allocate_path_ips: graph is not a path");
  const int n = inst.agents;
  if (n < 1) throw std::invalid_argument("allocate_path_ips: needs agents");
  if (static_cast<int>(inst.valuations.size()) != n) {
    throw std::invalid_argument("allocate_path_ips: one valuation per agent required");
  }
  std::vector<const AdditiveValuation*> value_of(n);
  for (int i = 0; i < n; ++i) value_of[i] = &additive_or_throw(inst.valuations[i], "allocate_path_ips");

  const std::vector<int> order = path_order(inst.graph);
  const int m = inst.goods();

  PathIpsResult result;
  result.allocation.bundles.assign(n, {});
  std::vector<int> unserved(n);
  std::iota(unserved.begin(), unserved.end(), 0);
  std::vector<int> current;
  int pos = 0;
  while (unserved.size() > 1) {
    // The bundle is offered before each extension, so an agent satisfied by
    // the empty bundle (zero threshold or zero total) is served immediately.
    int taker = -1;
    for (std::size_t idx = 0; idx < unserved.size(); ++idx) {
      if (is_ips_bundle(*value_of[unserved[idx]], current, n, unserved[idx])) {
        taker = static_cast<int>(idx);
        break;
      }
    }
    if (taker >= 0) {
      std::sort(current.begin(), current.end());
      result.allocation.bundles[unserved[taker]] = std::move(current);
      current = {};
      unserved.erase(unserved.begin() + taker);
      continue;
    }
    if (pos == m) {
      throw GuaranteeViolation("allocate_path_ips: goods exhausted before every agent was served");
    }
    current.push_back(order[pos++]);
  }
  while (pos < m) current.push_back(order[pos++]);
  std::sort(current.begin(), current.end());
  result.allocation.bundles[unserved[0]] = std::move(current);

  for (int i = 0; i < n; ++i) {
    auto cert = is_ips_bundle(*value_of[i], result.allocation.bundles[i], n, i);
    if (!cert) throw GuaranteeViolation("allocate_path_ips: a final bundle misses the share threshold");
    result.certificates.push_back(std::move(*cert));
  }
  return result;
}

Allocation allocate_star(const Instance& inst) {
  const Graph& g = inst.graph;
  const int m = g.vertex_count();
  const int n = inst.agents;
  if (m < 2 || !g.is_tree()) throw std::invalid_argument("allocate_star: graph is not a star");
  int center = -1;
  for (int v = 0; v < m; ++v) {
    if (g.degree(v) == m - 1) {
      center = v;
      break;
    }
  }
  if (center < 0) throw std::invalid_argument("allocate_star: graph is not a star");
  if (n < 2 || n > m) throw std::invalid_argument("allocate_star: needs 2 <= agents <= goods");
  if (static_cast<int>(inst.valuations.size()) != n) {
    throw std::invalid_argument("allocate_star: one valuation per agent required");
  }

  std::vector<char> taken(m, 0);
  taken[center] = 1;
  Allocation alloc;
  alloc.bundles.assign(n, {});
  for (int i = 0; i + 1 < n; ++i) {
    const AdditiveValuation& u = additive_or_throw(inst.valuations[i], "allocate_star");
    int pick = -1;
    for (int v = 0; v < m; ++v) {
      if (taken[v]) continue;
      if (pick < 0 || u.value_of_good(v) > u.value_of_good(pick)) pick = v;
    }
    taken[pick] = 1;
    alloc.bundles[i] = {pick};
  }
  std::vector<int> last = {center};
  for (int v = 0; v < m; ++v) {
    if (!taken[v]) last.push_back(v);
  }
  std::sort(last.begin(), last.end());
  alloc.bundles[n - 1] = std::move(last);
  return alloc;
}

namespace {

// Breadth-first spanning tree from vertex 0, neighbors in ascending order.
// Returns the parent array (parent[0] = -1).
std::vector<int> bfs_tree_parents(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<int> parent(m, -2);
  std::deque<int> queue;
  parent[0] = -1;
  queue.push_back(0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < m; ++v) {
    if (parent[v] == -2) throw std::invalid_argument("graph must be connected");
  }
  return parent;
}

}  // namespace

ConnectedBipartition bipartition_cut_vertex(const Graph& g, const AdditiveValuation& u) {
  const int m = g.vertex_count();
  if (m < 2) throw std::invalid_argument("bipartition_cut_vertex: needs at least two vertices");
  if (g.vertex_count() != u.goods()) {
    throw std::invalid_argument("bipartition_cut_vertex: graph size does not match the valuation");
  }
  if (vertex_connectivity(g) != 1) {
    throw std::invalid_argument(
        "bipartition_cut_vertex: requires a cut vertex (use the biconnected variant otherwise)");
  }

  const std::vector<int> parent = bfs_tree_parents(g);
  std::vector<std::vector<int>> tree_adj(m);
  for (int v = 1; v < m; ++v) {
    tree_adj[v].push_back(parent[v]);
    tree_adj[parent[v]].push_back(v);
  }
  for (auto& nb : tree_adj) std::sort(nb.begin(), nb.end());

  const Rational total = u.total();

  // Branch component of `root` in the tree with `center` removed.
  auto branch_of = [&](int center, int root) {
    std::vector<int> comp = {root};
    std::vector<char> seen(m, 0);
    seen[center] = 1;
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : tree_adj[comp[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
  };
  auto value_of = [&](const std::vector<int>& vs) { return u.value(vs); };

  // Centroid walk: while some branch holds more than half the total value,
  // step into it. At most one branch can, so the walk never backtracks.
  int center = 0;
  for (int steps = 0;; ++steps) {
    if (steps > m) throw GuaranteeViolation("bipartition_cut_vertex: centroid walk failed to settle");
    int heavy = -1;
    for (int w : tree_adj[center]) {
      if (Rational(2) * value_of(branch_of(center, w)) > total) {
        heavy = w;
        break;
      }
    }
    if (heavy < 0) break;
    center = heavy;
  }

  // Merge the tree branches along non-tree edges; every intermediate group is
  // a candidate because both it and its complement stay connected.
  std::vector<int> group_of(m, -1);
  std::vector<std::vector<int>> group_members;
  for (int w : tree_adj[center]) {
    std::vector<int> comp = branch_of(center, w);
    for (int v : comp) group_of[v] = static_cast<int>(group_members.size());
    group_members.push_back(std::move(comp));
  }
  std::vector<int> group_parent(group_members.size());
  std::iota(group_parent.begin(), group_parent.end(), 0);
  auto find_group = [&](int x) {
    while (group_parent[x] != x) {
      group_parent[x] = group_parent[group_parent[x]];
      x = group_parent[x];
    }
    return x;
  };

  std::vector<std::vector<int>> candidates = group_members;
  for (const auto& [a, b] : g.edges()) {
    if (a == center || b == center) continue;
    if (parent[a] == b || parent[b] == a) continue;  // tree edge
    const int ga = find_group(group_of[a]);
    const int gb = find_group(group_of[b]);
    if (ga == gb) continue;
    group_parent[gb] = ga;
    std::vector<int> merged;
    std::merge(group_members[ga].begin(), group_members[ga].end(), group_members[gb].begin(),
               group_members[gb].end(), std::back_inserter(merged));
    group_members[ga] = merged;
    candidates.push_back(std::move(merged));
  }

  int best = -1;
  Rational best_min;
  for (int c = 0; c < static_cast<int>(candidates.size()); ++c) {
    const Rational inside = value_of(candidates[c]);
    const Rational low = std::min(inside, total - inside);
    if (best < 0 || low > best_min) {
      best = c;
      best_min = low;
    }
  }

  ConnectedBipartition parts;
  parts.part1 = candidates[best];
  std::vector<char> taken(m, 0);
  for (int v : parts.part1) taken[v] = 1;
  for (int v = 0; v < m; ++v) {
    if (!taken[v]) parts.part2.push_back(v);
  }
  return parts;
}

ConnectedBipartition bipartition_biconnected(const Graph& g, const AdditiveValuation& u) {
  const int m = g.vertex_count();
  if (g.vertex_count() != u.goods()) {
    throw std::invalid_argument("bipartition_biconnected: graph size does not match the valuation");
  }
  const BlockTree bt = block_tree(g);
  if (m < 3 || bt.blocks.size() != 1) {
    throw std::invalid_argument("bipartition_biconnected: requires a biconnected graph with m >= 3");
  }

  const Rational total = u.total();
  bool found = false;
  Rational best;
  std::vector<int> best_prefix;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      std::vector<int> order = bipolar_between(g, a, b);
      for (int dir = 0; dir < 2; ++dir) {
        if (dir == 1) std::reverse(order.begin(), order.end());
        Rational prefix_value(0);
        for (int cut = 1; cut <= m - 1; ++cut) {
          prefix_value = prefix_value + u.value_of_good(order[cut - 1]);
          const Rational low = std::min(prefix_value, total - prefix_value);
          if (!found || low > best) {
            found = true;
            best = low;
            best_prefix.assign(order.begin(), order.begin() + cut);
          }
        }
      }
    }
  }
  if (!found) throw GuaranteeViolation("bipartition_biconnected: no cut was evaluated");

  ConnectedBipartition parts;
  parts.part1 = best_prefix;
  std::sort(parts.part1.begin(), parts.part1.end());
  std::vector<char> taken(m, 0);
  for (int v : parts.part1) taken[v] = 1;
  for (int v = 0; v < m; ++v) {
    if (!taken[v]) parts.part2.push_back(v);
  }
  return parts;
}

Allocation cut_and_choose(const ConnectedBipartition& parts, const Valuation& u2) {
  Allocation alloc;
  alloc.bundles.assign(2, {});
  if (u2.value(parts.part2) > u2.value(parts.part1)) {
    alloc.bundles[1] = parts.part2;
    alloc.bundles[0] = parts.part1;
  } else {
    alloc.bundles[1] = parts.part1;
    alloc.bundles[0] = parts.part2;
  }
  return alloc;
}

Allocation allocate_tree_gmms(const Instance& inst) {
  const Graph& g = inst.graph;
  const int m = g.vertex_count();
  const int n = inst.agents;
  if (!g.is_tree()) throw std::invalid_argument("allocate_tree_gmms: graph is not a tree");
  if (n < 1) throw std::invalid_argument("allocate_tree_gmms: needs agents");
  if (static_cast<int>(inst.valuations.size()) != n) {
    throw std::invalid_argument("allocate_tree_gmms: one valuation per agent required");
  }

  if (m < n) {
    // Everyone's connected maximin share is zero; hand out singletons.
    Allocation alloc;
    alloc.bundles.assign(n, {});
    for (int v = 0; v < m; ++v) alloc.bundles[v] = {v};
    return alloc;
  }

  std::vector<Rational> target(n);
  for (int i = 0; i < n; ++i) target[i] = exact_gmms_tree(g, inst.valuations[i], n).value;

  const int edge_count = m - 1;
  const int cuts = n - 1;
  long long work = 1;
  for (int i = 0; i < cuts; ++i) work = work * (edge_count - i) / (i + 1);
  for (int i = 2; i <= n; ++i) {
    work *= i;
    if (work > 5'000'000) throw CapExceeded("allocate_tree_gmms: search space too large");
  }

  const std::vector<std::pair<int, int>>& edges = g.edges();
  std::vector<int> pick(cuts);
  for (int i = 0; i < cuts; ++i) pick[i] = i;
  std::vector<int> parent(m);
  std::vector<int> assignment(n, -1);

  while (true) {
    for (int v = 0; v < m; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    int next = 0;
    for (int e = 0; e < edge_count; ++e) {
      if (next < cuts && pick[next] == e) {
        ++next;
        continue;
      }
      parent[find(edges[e].first)] = find(edges[e].second);
    }
    std::vector<std::vector<int>> groups(m);
    for (int v = 0; v < m; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> parts;
    parts.reserve(n);
    for (int v = 0; v < m; ++v) {
      if (!groups[v].empty()) parts.push_back(std::move(groups[v]));
    }

    // Match agents to components so that everyone reaches her own target.
    std::vector<std::vector<char>> fits(n, std::vector<char>(n, 0));
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (int a = 0; a < n; ++a) {
        fits[p][a] = inst.valuations[a].value(parts[p]) >= target[a] ? 1 : 0;
      }
    }
    std::vector<char> used(n, 0);
    auto assign = [&](auto&& self, int p) -> bool {
      if (p == n) return true;
      for (int a = 0; a < n; ++a) {
        if (used[a] || !fits[p][a]) continue;
        used[a] = 1;
        assignment[p] = a;
        if (self(self, p + 1)) return true;
        used[a] = 0;
      }
      return false;
    };
    if (assign(assign, 0)) {
      Allocation alloc;
      alloc.bundles.assign(n, {});
      for (int p = 0; p < n; ++p) alloc.bundles[assignment[p]] = std::move(parts[p]);
      return alloc;
    }

    int j = cuts - 1;
    while (j >= 0 && pick[j] == edge_count - cuts + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < cuts; ++t) pick[t] = pick[t - 1] + 1;
  }
  throw GuaranteeViolation("allocate_tree_gmms: no edge cut satisfied every agent's connected share");
}

Allocation allocate_any_graph(const Instance& inst) {
  const Graph& g = inst.graph;
  const int m = g.vertex_count();
  if (!g.is_connected()) throw std::invalid_argument("allocate_any_graph: graph must be connected");
  if (g.is_tree()) return allocate_tree_gmms(inst);
  const std::vector<int> parent = bfs_tree_parents(g);
  std::vector<std::pair<int, int>> tree_edges;
  tree_edges.reserve(m - 1);
  for (int v = 1; v < m; ++v) {
    tree_edges.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
  }
  Instance on_tree{inst.agents, Graph(m, std::move(tree_edges)), inst.valuations};
  return allocate_tree_gmms(on_tree);
}

std::vector<int> subset_window(const std::vector<Rational>& x, const Rational& r) {
  const int k = static_cast<int>(x.size());
  if (k < 1) throw std::invalid_argument("subset_window: empty input");
  Rational sum(0);
  for (const Rational& xi : x) {
    if (xi < Rational(1)) throw std::invalid_argument("subset_window: entries must be at least 1");
    sum = sum + xi;
  }
  if (sum < Rational(2) || sum > Rational(2) * Rational(k)) {
    throw std::invalid_argument("subset_window: sum out of range");
  }
  if (r < Rational(0) || r > sum - Rational(2)) {
    throw std::invalid_argument("subset_window: target out of range");
  }

  // Inductive construction; every branch keeps the invariant that the chosen
  // indices sum into [target, target + 2].
  auto solve = [&](auto&& self, std::vector<int> idx, Rational target) -> std::vector<int> {
    if (idx.size() == 1) return idx;
    Rational s(0);
    for (int i : idx) s = s + x[i];
    int imax = idx[0];
    for (int i : idx) {
      if (x[i] > x[imax]) imax = i;
    }
    if (x[imax] <= Rational(2)) {
      // Small entries: walk the prefix until it reaches the target; each step
      // adds at most 2, so the first crossing lands inside the window.
      std::vector<int> out;
      Rational cum(0);
      for (int i : idx) {
        if (cum >= target) return out;
        out.push_back(i);
        cum = cum + x[i];
      }
      return out;
    }
    const Rational half = s / Rational(2);
    if (target >= half - Rational(1)) {
      if (x[imax] >= target) return {imax};
      std::vector<int> rest;
      for (int i : idx) {
        if (i != imax) rest.push_back(i);
      }
      std::vector<int> inner = self(self, std::move(rest), target - x[imax]);
      inner.push_back(imax);
      std::sort(inner.begin(), inner.end());
      return inner;
    }
    // Low target: solve for the complement, which lands in the high branch.
    std::vector<int> other = self(self, idx, s - target - Rational(2));
    std::vector<char> drop(x.size(), 0);
    for (int i : other) drop[i] = 1;
    std::vector<int> out;
    for (int i : idx) {
      if (!drop[i]) out.push_back(i);
    }
    return out;
  };

  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> picked = solve(solve, std::move(all), r);
  std::sort(picked.begin(), picked.end());
  const Rational got = std::accumulate(picked.begin(), picked.end(), Rational(0),
                                       [&](Rational acc, int i) { return acc + x[i]; });
  if (got < r || got > r + Rational(2)) {
    throw GuaranteeViolation("subset_window: constructed subset missed the window");
  }
  return picked;
}

}  // namespace graphfair
