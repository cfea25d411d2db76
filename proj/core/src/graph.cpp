#include "graphfair/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "graphfair/config.hpp"

namespace graphfair {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : m_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(m_, {});
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a == b) throw std::invalid_argument("Graph: loop edge");
    if (a < 0 || b >= m_) throw std::invalid_argument("Graph: edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("Graph: duplicate edge");
  edges_ = std::move(edges);
  for (auto [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= m_ || v >= m_ || u == v) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::is_connected() const {
  if (m_ <= 1) return true;
  std::vector<char> seen(m_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == m_;
}

bool Graph::is_complete() const {
  return static_cast<long long>(edges_.size()) * 2 == static_cast<long long>(m_) * (m_ - 1);
}

bool Graph::is_tree() const {
  return static_cast<int>(edges_.size()) == m_ - 1 && is_connected();
}

bool Graph::is_path_graph() const {
  if (!is_tree()) return false;
  for (int v = 0; v < m_; ++v)
    if (degree(v) > 2) return false;
  return true;
}

bool is_connected_subset(const Graph& g, const std::vector<int>& vertices) {
  const int m = g.vertex_count();
  std::vector<char> in_set(m, 0);
  for (int v : vertices) {
    if (v < 0 || v >= m) throw std::invalid_argument("is_connected_subset: vertex out of range");
    in_set[v] = 1;
  }
  int size = 0;
  int start = -1;
  for (int v = 0; v < m; ++v)
    if (in_set[v]) {
      ++size;
      if (start < 0) start = v;
    }
  if (size <= 1) return true;
  std::vector<char> seen(m, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (in_set[v] && !seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
  }
  return reached == size;
}

namespace {

// Unit-capacity flow network used for Menger-style path counting.
struct FlowNet {
  struct Arc {
    int to;
    int rev;
    int cap;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNet(int n) : arcs(n) {}

  void add(int from, int to, int cap) {
    arcs[from].push_back({to, static_cast<int>(arcs[to].size()), cap});
    arcs[to].push_back({from, static_cast<int>(arcs[from].size()) - 1, 0});
  }

  bool augment_unit(int s, int t) {
    std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
    std::vector<char> seen(arcs.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int u = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
        const Arc& a = arcs[u][i];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          pred[a.to] = {u, i};
          q.push(a.to);
        }
      }
    }
    if (!seen[t]) return false;
    for (int v = t; v != s;) {
      auto [u, i] = pred[v];
      arcs[u][i].cap -= 1;
      arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
      v = u;
    }
    return true;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && augment_unit(s, t)) ++flow;
    return flow;
  }
};

// Vertex v splits into entry node 2v and exit node 2v+1 joined by a unit arc,
// so a unit of flow through v consumes the vertex.
int disjoint_path_count(const Graph& g, int s, int t, int limit) {
  const int m = g.vertex_count();
  FlowNet net(2 * m);
  for (int v = 0; v < m; ++v) net.add(2 * v, 2 * v + 1, 1);
  for (auto [a, b] : g.edges()) {
    net.add(2 * a + 1, 2 * b, 1);
    net.add(2 * b + 1, 2 * a, 1);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int m = g.vertex_count();
  if (m < 2) throw std::invalid_argument("vertex_connectivity: need at least two vertices");
  if (!g.is_connected()) throw std::invalid_argument("vertex_connectivity: graph is disconnected");
  if (g.is_complete()) return m - 1;
  int best = m - 1;
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, disjoint_path_count(g, s, t, best));
    }
  return best;
}

DeletionWitness max_components_single_deletion(const Graph& g) {
  const int m = g.vertex_count();
  if (m < 2) throw std::invalid_argument("max_components_single_deletion: need at least two vertices");
  if (!g.is_connected()) throw std::invalid_argument("max_components_single_deletion: graph is disconnected");
  DeletionWitness best;
  for (int v = 0; v < m; ++v) {
    std::vector<char> seen(m, 0);
    seen[v] = 1;
    int components = 0;
    for (int start = 0; start < m; ++start) {
      if (seen[start]) continue;
      ++components;
      std::queue<int> q;
      q.push(start);
      seen[start] = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
      }
    }
    if (components > best.components) {
      best.components = components;
      best.vertex = v;
    }
  }
  return best;
}

MergedGraph merge_vertices(const Graph& g, const std::vector<std::vector<int>>& parts) {
  const int m = g.vertex_count();
  std::vector<int> part_of(m, -1);
  MergedGraph result;
  result.parts.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("merge_vertices: empty part");
    std::vector<int> part = parts[i];
    std::sort(part.begin(), part.end());
    for (int v : part) {
      if (v < 0 || v >= m) throw std::invalid_argument("merge_vertices: vertex out of range");
      if (part_of[v] != -1) throw std::invalid_argument("merge_vertices: parts are not disjoint");
      part_of[v] = static_cast<int>(i);
    }
    if (!is_connected_subset(g, part)) throw std::invalid_argument("merge_vertices: part is not connected");
    result.parts.push_back(std::move(part));
  }
  for (int v = 0; v < m; ++v)
    if (part_of[v] == -1) throw std::invalid_argument("merge_vertices: parts do not cover the vertex set");

  std::set<std::pair<int, int>> merged_edges;
  for (auto [a, b] : g.edges()) {
    int pa = part_of[a];
    int pb = part_of[b];
    if (pa != pb) merged_edges.insert({std::min(pa, pb), std::max(pa, pb)});
  }
  result.graph = Graph(static_cast<int>(parts.size()),
                       std::vector<std::pair<int, int>>(merged_edges.begin(), merged_edges.end()));
  return result;
}

}  // namespace graphfair
