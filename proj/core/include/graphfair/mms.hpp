#pragma once

#include <optional>
#include <vector>

#include "graphfair/valuation.hpp"

namespace graphfair {

// Indivisible proportional share threshold:
//   1/n          when m >= 2n - 1,
//   1/(m-n+1)    when n <= m < 2n - 1,
//   0            when m < n.
Rational ips_threshold(int n, int m);

struct IpsCertificate {
  int agent = 0;
  std::vector<int> removed;  // the discarded set B, disjoint from the bundle
  Rational threshold;        // ips_threshold(n, m)
};

// Checks whether `bundle` is an indivisible proportional share for an agent
// with additive valuation u among n agents: there must be a set B of at most
// n-1 goods outside the bundle with u(bundle) >= threshold * u(M minus B).
// Removing the n-1 highest-valued outside goods (lowest index on ties) is
// optimal, so only that candidate is tested. Returns the certificate or
// nothing.
std::optional<IpsCertificate> is_ips_bundle(const AdditiveValuation& u, const std::vector<int>& bundle,
                                            int n, int agent = 0);

struct PathIpsResult {
  Allocation allocation;
  std::vector<IpsCertificate> certificates;  // one per agent
};

// Left-to-right sweep over a path graph: grow a bundle from the lower-numbered
// endpoint until it is an IPS bundle for some unserved agent (lowest index
// wins), hand it over, continue; leftover goods join the last bundle. Requires
// a path graph and additive valuations. Every agent ends with an IPS bundle.
PathIpsResult allocate_path_ips(const Instance& inst);

// Star graphs: agents 1..n-1 pick their favorite remaining leaf in turn
// (lowest index on ties); the last agent takes the center and everything left.
// Requires a star (one center adjacent to all leaves, m >= 2... for m == 2
// either vertex serves as center), additive valuations, and 2 <= n <= m. Each
// agent receives at least her maximin share divided by m - n + 1.
Allocation allocate_star(const Instance& inst);

struct ConnectedBipartition {
  std::vector<int> part1;
  std::vector<int> part2;
};

// Bipartition for graphs with a cut vertex: walk a breadth-first spanning tree
// toward the heavy side until no branch holds more than half the total value,
// then either split off the best merged component of g minus that vertex (when
// the vertex itself is heavy) or take the best group formed while merging
// branches along non-tree edges. The smaller side is worth at least MMS / k,
// where k = max_components_single_deletion(g). Requires connectivity 1 (or K2)
// and an additive valuation.
ConnectedBipartition bipartition_cut_vertex(const Graph& g, const AdditiveValuation& u);

// Bipartition for biconnected graphs: for every vertex pair, build a bipolar
// ordering between them and scan every prefix cut; keep the split with the
// best minimum value (ties: first pair in lexicographic order, ascending cut).
// The minimum side is worth at least 3/4 of the maximin share. Requires a
// biconnected graph with m >= 3 and an additive valuation.
ConnectedBipartition bipartition_biconnected(const Graph& g, const AdditiveValuation& u);

// Agent 2 takes her weakly preferred part (part1 on a tie), agent 1 the other.
Allocation cut_and_choose(const ConnectedBipartition& parts, const Valuation& u2);

// Trees: exhaustively search edge cuts and agent assignments for a connected
// allocation giving every agent at least her own connected maximin share. One
// always exists on trees; failing to find one is a defect, not a possibility.
// Requires a tree and caps the search size.
Allocation allocate_tree_gmms(const Instance& inst);

// Any connected graph: allocate on a breadth-first spanning tree rooted at
// vertex 0. Every agent receives at least her (unconstrained) maximin share
// divided by m - n + 1.
Allocation allocate_any_graph(const Instance& inst);

// Given positive rationals x_1..x_k, each at least 1, with 2 <= sum <= 2k, and
// a target 0 <= r <= sum - 2: returns indices whose sum lands in [r, r + 2].
// Constructive recursion: prefix walk when all entries are small, otherwise
// split off the largest entry or solve the complementary target.
std::vector<int> subset_window(const std::vector<Rational>& x, const Rational& r);

}  // namespace graphfair
