#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphfair/valuation.hpp"

namespace graphfair {

struct PartitionResult {
  Rational value;                         // the maximin value
  std::vector<std::vector<int>> bundles;  // a witness partition attaining it
};

// Exact maximin share of splitting all goods into n bundles under valuation u,
// no connectivity constraint. n == 2 enumerates the 2^(m-1) bipartitions;
// n >= 3 runs a memoized recursion over (parts left, remaining goods). When
// m < n the value is zero and the witness pads with empty bundles. Subject to
// the mms caps.
PartitionResult exact_mms(const Valuation& u, int n);

// Exact maximin share over connected partitions of g into n bundles (the
// graph-restricted variant). Same caps and conventions as exact_mms; requires
// a connected graph matching u's goods.
PartitionResult exact_gmms(const Graph& g, const Valuation& u, int n);

// Independent route for trees: enumerate the choose(m-1, n-1) ways of cutting
// n-1 tree edges; the components are the bundles. Requires g to be a tree.
PartitionResult exact_gmms_tree(const Graph& g, const Valuation& u, int n);

// exact_gmms / exact_mms as an exact rational, with 0/0 defined as 1.
Rational poc_ratio(const Graph& g, const Valuation& u, int n);

struct PocSearchResult {
  Rational ratio;                // best (lowest) ratio found; an upper bound on the infimum
  std::vector<Rational> values;  // witness additive valuation
  long long evaluations = 0;     // number of ratio evaluations spent
  bool exhaustive = false;       // true when the whole integer grid was scanned
};

// Searches integer-valued additive valuations with entries in 0..max_value for
// a low connectivity ratio on g. Exhaustive when (max_value+1)^m fits the
// evaluation budget heuristic (10^7), otherwise seeded random restarts with
// coordinate hill climbing, spending at most `budget` evaluations. The result
// ratio always equals poc_ratio of the returned witness.
PocSearchResult poc_search(const Graph& g, int n, int max_value, long long budget, std::uint64_t seed);

// Predicate selector for exists_connected_allocation.
struct AllocationPredicate {
  enum class Kind { EnvyFree, EnvyFreeUpTo, EnvyFreeUpToAny, MmsFraction, Ips };
  Kind kind = Kind::EnvyFree;
  int k = 0;             // for EnvyFreeUpTo
  Rational alpha = 1;    // for MmsFraction

  static AllocationPredicate ef() { return {Kind::EnvyFree, 0, 1}; }
  static AllocationPredicate efk(int k) { return {Kind::EnvyFreeUpTo, k, 1}; }
  static AllocationPredicate efx() { return {Kind::EnvyFreeUpToAny, 0, 1}; }
  static AllocationPredicate mms_fraction(Rational alpha) { return {Kind::MmsFraction, 0, alpha}; }
  static AllocationPredicate ips() { return {Kind::Ips, 0, 1}; }
};

// Exhaustively searches connected allocations (all goods assigned, empty
// bundles allowed) for one satisfying the predicate. Deterministic: the first
// hit in enumeration order. Subject to the mms caps on m.
std::optional<Allocation> exists_connected_allocation(const Instance& inst,
                                                      const AllocationPredicate& predicate);

// Smallest k such that every identical binary additive valuation on g admits a
// connected EF-k allocation for two agents, decided via
// exists_connected_allocation per valuation. Subject to the binary cap.
int guaranteed_efk_bruteforce(const Graph& g);

}  // namespace graphfair
