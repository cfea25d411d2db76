#pragma once

// Reference implementations used as test oracles. Everything here is written
// against the raw graph data (vertex count + edge list) and the plain bundle
// value accessor, independently of the library's structural algorithms, so a
// bug in the production path cannot hide behind an identical bug here.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "graphfair/rational.hpp"
#include "graphfair/valuation.hpp"

namespace naive {

inline std::vector<std::vector<int>> adjacency(const graphfair::Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (auto [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// Connectivity of the subgraph induced by `keep` (as a membership mask over
// all vertices), by breadth-first search. Empty and singleton sets count as
// connected.
inline bool connected_mask(const std::vector<std::vector<int>>& adj, const std::vector<char>& keep) {
  const int m = static_cast<int>(keep.size());
  int start = -1;
  int total = 0;
  for (int v = 0; v < m; ++v)
    if (keep[v]) {
      if (start < 0) start = v;
      ++total;
    }
  if (total <= 1) return true;
  std::vector<char> seen(m, 0);
  std::vector<int> queue{start};
  seen[start] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (int w : adj[v])
      if (keep[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == total;
}

inline bool connected_subset(const graphfair::Graph& g, const std::vector<int>& vertices) {
  std::vector<char> keep(g.vertex_count(), 0);
  for (int v : vertices) keep[v] = 1;
  return connected_mask(adjacency(g), keep);
}

// Minimum vertex cut by deletion of every subset in increasing size order;
// complete graphs have no cut and get m - 1. Exponential, fine for m <= 10.
inline int naive_vertex_connectivity(const graphfair::Graph& g) {
  const int m = g.vertex_count();
  const auto adj = adjacency(g);
  for (int size = 0; size <= m - 2; ++size) {
    for (std::uint32_t removed = 0; removed < (std::uint32_t(1) << m); ++removed) {
      if (std::popcount(removed) != size) continue;
      std::vector<char> keep(m, 1);
      for (int v = 0; v < m; ++v)
        if (removed & (std::uint32_t(1) << v)) keep[v] = 0;
      int left = m - size;
      if (left < 2) continue;
      if (!connected_mask(adj, keep)) return size;
    }
  }
  return m - 1;
}

// (a,b)-linkedness by definition: for every disjoint M1, M2 of the given
// sizes, some connected superset of M1 avoids M2 while leaving all of M2 in
// one component of the rest.
inline bool naive_ab_linked(const graphfair::Graph& g, int a, int b) {
  const int m = g.vertex_count();
  const auto adj = adjacency(g);

  auto separable = [&](std::uint32_t m1, std::uint32_t m2) {
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << m); ++s) {
      if ((s & m1) != m1 || (s & m2) != 0) continue;
      std::vector<char> in_s(m, 0);
      std::vector<char> in_rest(m, 0);
      for (int v = 0; v < m; ++v) {
        if (s & (std::uint32_t(1) << v))
          in_s[v] = 1;
        else
          in_rest[v] = 1;
      }
      if (!connected_mask(adj, in_s)) continue;
      // All of M2 must sit inside one component of the complement.
      int start = std::countr_zero(m2);
      std::vector<char> seen(m, 0);
      std::vector<int> queue{start};
      seen[start] = 1;
      while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w : adj[v])
          if (in_rest[w] && !seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
      bool all = true;
      for (int v = 0; v < m && all; ++v)
        if (m2 & (std::uint32_t(1) << v)) all = seen[v];
      if (all) return true;
    }
    return false;
  };

  for (std::uint32_t m1 = 0; m1 < (std::uint32_t(1) << m); ++m1) {
    if (std::popcount(m1) != a) continue;
    for (std::uint32_t m2 = 0; m2 < (std::uint32_t(1) << m); ++m2) {
      if (std::popcount(m2) != b || (m1 & m2) != 0) continue;
      if (!separable(m1, m2)) return false;
    }
  }
  return true;
}

inline std::vector<int> mask_to_bundle(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Maximin share over all n-way assignments of the goods, no connectivity.
// n^m enumeration; keep m small.
inline graphfair::Rational naive_mms(const graphfair::Valuation& u, int n) {
  const int m = u.goods();
  std::vector<int> assign(m, 0);
  graphfair::Rational best;
  bool first = true;
  while (true) {
    std::vector<std::uint32_t> parts(n, 0);
    for (int g = 0; g < m; ++g) parts[assign[g]] |= std::uint32_t(1) << g;
    graphfair::Rational low = u.value(parts[0]);
    for (int i = 1; i < n; ++i) low = std::min(low, u.value(parts[i]));
    if (first || low > best) {
      best = low;
      first = false;
    }
    int g = 0;
    while (g < m && assign[g] == n - 1) assign[g++] = 0;
    if (g == m) break;
    ++assign[g];
  }
  return best;
}

// Same enumeration restricted to assignments whose parts all induce connected
// subgraphs.
inline graphfair::Rational naive_gmms(const graphfair::Graph& g, const graphfair::Valuation& u, int n) {
  const int m = u.goods();
  const auto adj = adjacency(g);
  std::vector<int> assign(m, 0);
  graphfair::Rational best;
  bool first = true;
  while (true) {
    std::vector<std::uint32_t> parts(n, 0);
    for (int good = 0; good < m; ++good) parts[assign[good]] |= std::uint32_t(1) << good;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<char> keep(m, 0);
      for (int v = 0; v < m; ++v)
        if (parts[i] & (std::uint32_t(1) << v)) keep[v] = 1;
      ok = connected_mask(adj, keep);
    }
    if (ok) {
      graphfair::Rational low = u.value(parts[0]);
      for (int i = 1; i < n; ++i) low = std::min(low, u.value(parts[i]));
      if (first || low > best) {
        best = low;
        first = false;
      }
    }
    int good = 0;
    while (good < m && assign[good] == n - 1) assign[good++] = 0;
    if (good == m) break;
    ++assign[good];
  }
  return best;
}

// EF-k by enumeration of every removal subset of size at most k.
inline bool naive_envy_up_to(const graphfair::Valuation& u, const std::vector<int>& own,
                             const std::vector<int>& other, int k) {
  const graphfair::Rational mine = u.value(own);
  const int sz = static_cast<int>(other.size());
  for (std::uint32_t removed = 0; removed < (std::uint32_t(1) << sz); ++removed) {
    if (std::popcount(removed) > k) continue;
    std::vector<int> kept;
    for (int i = 0; i < sz; ++i)
      if (!(removed & (std::uint32_t(1) << i))) kept.push_back(other[i]);
    if (mine >= u.value(kept)) return true;
  }
  return false;
}

inline bool naive_is_bipolar(const graphfair::Graph& g, const std::vector<int>& order) {
  const int m = g.vertex_count();
  if (static_cast<int>(order.size()) != m) return false;
  const auto adj = adjacency(g);
  std::vector<char> prefix(m, 0);
  std::vector<char> suffix(m, 1);
  for (int i = 0; i < m; ++i) {
    prefix[order[i]] = 1;
    if (!connected_mask(adj, prefix)) return false;
  }
  for (int i = 0; i < m; ++i) {
    suffix[order[i]] = 0;
    if (!connected_mask(adj, suffix)) return false;
  }
  return true;
}

// Whether any bipolar ordering exists, by scanning all permutations.
// Factorial, fine for m <= 7.
inline bool naive_bipolar_exists(const graphfair::Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (naive_is_bipolar(g, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace naive
