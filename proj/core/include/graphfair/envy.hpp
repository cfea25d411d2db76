#pragma once

#include <vector>

#include "graphfair/valuation.hpp"

namespace graphfair {

// Two agents on a bipolar-ordered graph: scan prefix cuts ascending (including
// the empty prefix), trying the prefix for agent 1 first, then for agent 2,
// and return the first EF1 split. Existence is guaranteed for monotone
// valuations, so exhaustion throws GuaranteeViolation.
Allocation ef1_two_on_bipolar(const std::vector<int>& order, const Valuation& u1, const Valuation& u2);

// Plan for the best envy bound achievable for two agents on g with
// guardian-dependent merging.
struct EfkPlan {
  int k = 1;                                    // the optimal bound k*
  std::vector<int> path_nodes;                  // chosen block-tree path (node ids of block_tree(g))
  std::vector<std::vector<int>> merge_parts;    // partition of the vertices: guardian groups + singletons
};

// k* = min over maximal block-tree paths of (1 + the largest dependent count
// of any cut vertex attached to the path). Guardians keep their dependents in
// one merged part; every other vertex stays alone. Ties: first leaf pair in
// block order. Requires a connected graph.
EfkPlan optimal_efk_two(const Graph& g);

struct EfkAllocation {
  Allocation allocation;
  int k = 1;
};

// Two agents, any connected graph: merge per optimal_efk_two, lift the
// valuations, run the bipolar EF1 scan on the merged graph, and expand the
// merged vertices back. The result is connected and EF-k* .
EfkAllocation efk_two_allocate(const Instance& inst);

struct EnvyCycleStep {
  int agent = -1;                          // who received a good (-1 for a cycle rotation)
  int good = -1;
  bool from_left = false;
  std::vector<std::vector<int>> bundles;   // bundle state after the step
};

// Envy-cycle elimination on a complete bipartite graph K_{a,b} with sides
// L (the side containing vertex 0) and R, for monotone valuations and
// n <= min(a, b): each agent is seeded with one L-good; afterwards the
// lowest-index unenvied agent picks, taking from L when she already holds an
// R-good (else from R), falling back to the other side when one is empty.
// Envy cycles are rotated away (lexicographically smallest cycle first) before
// every pick. The result is connected and EF1.
Allocation envy_cycle_bipartite(const Instance& inst, std::vector<EnvyCycleStep>* trace = nullptr);

// Double round robin on a complete bipartite graph for additive valuations:
// agents 1..n each pick their favorite remaining L-good in index order, then
// favorite remaining R-goods cycling in reverse order until R is empty.
// Connected (every agent holds an L-good) and EF1.
Allocation double_round_robin(const Instance& inst);

}  // namespace graphfair
