#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace graphfair {

// Simple undirected graph on vertices 0..m-1. Edges are stored as ordered
// pairs (i, j) with i < j, sorted lexicographically. Construction rejects
// loops, duplicate edges and out-of-range endpoints; connectivity is NOT a
// construction invariant (validation reports it as data), but most structural
// operations require it as a precondition.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return m_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  bool is_connected() const;
  bool is_complete() const;
  bool is_tree() const;
  bool is_path_graph() const;

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// True iff the subgraph induced by `vertices` is connected. The empty set and
// singletons count as connected.
bool is_connected_subset(const Graph& g, const std::vector<int>& vertices);

// Vertex connectivity. Complete graphs have connectivity m-1 by convention;
// everything else is the minimum over non-adjacent pairs of the maximum number
// of internally vertex-disjoint paths (computed by unit-capacity max flow on
// the split graph). Requires a connected graph with m >= 2.
int vertex_connectivity(const Graph& g);

struct DeletionWitness {
  int components = 0;  // maximum component count over all single deletions
  int vertex = -1;     // lowest-index vertex attaining it
};

// Maximum number of connected components obtainable by deleting one vertex.
// Requires a connected graph with m >= 2.
DeletionWitness max_components_single_deletion(const Graph& g);

// Block-cut decomposition. Blocks are the maximal biconnected subgraphs (a
// single edge forms a block; a connected graph with one vertex is one block).
// Distinct blocks share at most one vertex and every shared vertex is a cut
// vertex. Block vertex lists are sorted; blocks are sorted by their lists;
// cut vertices are sorted. The block-cut tree has one node per block and one
// per cut vertex, with an edge whenever the cut vertex belongs to the block.
struct BlockTree {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;

  int node_count() const { return static_cast<int>(blocks.size() + cut_vertices.size()); }
  // Node ids: 0..B-1 are blocks, B..B+C-1 are cut vertices.
  std::vector<std::vector<int>> node_adjacency() const;
  bool is_path() const;  // true iff every tree node has degree <= 2
};

// Requires a connected graph.
BlockTree block_tree(const Graph& g);

// Open ear decomposition: ears[0] is a cycle given as a vertex sequence (the
// closing edge is implied); every later ear is a path whose endpoints lie on
// earlier ears and whose interior vertices are new. Each edge of the graph
// appears in exactly one ear (an ear with no interior vertices is a single
// edge between covered vertices).
struct EarDecomposition {
  std::vector<std::vector<int>> ears;
};

// Builds an open ear decomposition whose first ear is `first_cycle`.
// Requires: g biconnected with m >= 3; first_cycle a cycle of g (distinct
// vertices, length >= 3, consecutive and closing edges present). Throws
// std::invalid_argument otherwise.
EarDecomposition open_ear_decomposition(const Graph& g, const std::vector<int>& first_cycle);

// A bipolar ordering: a permutation of the vertices in which every prefix and
// every suffix induces a connected subgraph.
bool is_bipolar_order(const Graph& g, const std::vector<int>& order);

// Bipolar ordering that starts at g1 and ends at g2, built by ear insertion
// over an open ear decomposition whose first ear is a cycle through g1 and g2
// (the shortest such cycle found by breadth-first augmentation, lowest vertex
// index first). Requires g biconnected, m >= 3, g1 != g2.
std::vector<int> bipolar_between(const Graph& g, int g1, int g2);

// Some bipolar ordering if one exists, i.e. iff the block-cut tree is a path.
// Requires a connected graph.
std::optional<std::vector<int>> bipolar_if_exists(const Graph& g);

// (a,b)-linkedness: for every pair of disjoint vertex sets M1, M2 with
// |M1| = a and |M2| = b there are disjoint connected subgraphs G1 and G2 with
// M1 inside G1 and M2 inside G2. Decided exhaustively; throws CapExceeded when
// m exceeds the configured cap. Requires a connected graph and a + b <= m.
bool is_ab_linked(const Graph& g, int a, int b);

struct MergedGraph {
  Graph graph;                          // vertex i of the merge is parts[i]
  std::vector<std::vector<int>> parts;  // the partition, parts sorted internally
};

// Contracts each part to a single vertex. `parts` must partition the vertex
// set and each part must induce a connected subgraph; the merged graph has an
// edge (i, j) iff some edge of g joins parts[i] and parts[j]. Throws
// std::invalid_argument on an invalid partition.
MergedGraph merge_vertices(const Graph& g, const std::vector<std::vector<int>>& parts);

}  // namespace graphfair
