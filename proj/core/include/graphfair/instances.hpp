#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "graphfair/valuation.hpp"

namespace graphfair {

// Instance over g where all n agents share one additive valuation.
Instance identical_instance(Graph g, std::vector<Rational> values, int n);

// Named instances. Each returns a validated instance; invalid parameters throw
// std::invalid_argument.

// Wheel on eight rim vertices plus a hub (vertex 8). Rim values 3,1,0,0,2,0,2,0
// in drawing order, hub 0; two identical agents. The maximin share is 4, the
// connected variant only reaches 3.
Instance make_fig2_wheel();

// K5 minus the two disjoint edges (1,3) and (2,4); values 0,2,1,2,3; two
// identical agents. Three-connected but not (2,2)-linked.
Instance make_fig3_l5();

// Star whose center (vertex 0) is worth k and each of the k leaves worth 1;
// two identical agents. Deleting the center leaves k components and any
// connected bipartition has a side worth only MMS / k.
Instance make_thm3_cut(int k);

// Complete graph minus the edge (0,1); vertices 0 and 1 worth m-2, vertex 2
// worth m-1, the rest worth 1; two identical agents. Connectivity ratio
// (2m-5)/(2m-4).
Instance make_thm9_matching(int m);

// Star with center (vertex 0) worth m-n+1, the first n-2 leaves worth m-n+1,
// and the remaining m-n+1 leaves worth 1; n identical agents. Connectivity
// ratio exactly 1/(m-n+1).
Instance make_thm12_star(int n, int m);

// Path instances matching the proportional-share threshold: for m >= 2n-1 the
// first 2n-1 vertices alternate 1, n, 1, .., n, 1 and the rest are 0; for
// n <= m < 2n-1 the first 2m-2n+1 vertices alternate 1 and m-n+1 and the
// remaining 2n-1-m are all m-n+1. n identical agents.
Instance make_thm16_path(int n, int m);

// Values 2, 2, 3, 1 on four distinct vertices a, b, c, d of g (0 elsewhere);
// two identical agents.
Instance make_prop7_pairs(const Graph& g, int a, int b, int c, int d);

// Witness that g is not (2,k)-linked: picks the lexicographically first
// inseparable pair (M1 of size 2, M2 of size k) and assigns k to both M1
// vertices, k+1 to the first M2 vertex and 1 to the rest of M2 (0 elsewhere);
// two identical agents. Throws if g is (2,k)-linked.
Instance make_prop9_linked(const Graph& g, int k);

// Star with every vertex worth 1; two identical agents.
Instance make_prop20_star(int m);

// For a connected non-complete graph g: the lexicographically first missing
// edge gets value 2 on both endpoints, the lowest remaining vertex gets 3, and
// every other vertex gets 1/(2m); two identical agents. No connected
// allocation is EFX.
Instance make_thm21_efx(const Graph& g);

// Six-vertex tree (center 0 with branches 4, 5 and path 1, 2, 3); values
// 2,3,4,0,2,2; three identical agents. No connected EF1 allocation exists.
Instance make_fig6_tree();

// Star on five vertices, all worth 1, three identical agents. No connected
// EF1 allocation exists (degree-4 obstruction).
Instance make_thm22_deg4();

// K_{2,b} with L = {0, 1} worth 2 each and the first four R-goods worth 1
// (0 beyond); three identical agents. Requires b >= 4; no connected EF1
// allocation exists.
Instance make_fig7_k2b(int b);

enum class RandomGraphKind { Connected, Tree, Biconnected, Path, Star };

// Seeded random connected graph on m vertices. Trees attach each vertex to a
// random earlier one; biconnected graphs grow from a random cycle by adding
// open ears; connected graphs are trees plus random extra edges. Deterministic
// for a fixed (kind, m, seed).
Graph random_graph(RandomGraphKind kind, int m, std::uint64_t seed);

// K_{a,b} with L = 0..a-1 and R = a..a+b-1.
Graph complete_bipartite(int a, int b);

// Uniform integer values in 0..max_value.
AdditiveValuation random_additive(int m, int max_value, std::mt19937_64& rng);

// Random monotone bundle table: independent uniform draws pushed up by
// superset maximization, with the empty bundle pinned to zero.
TabulatedValuation random_monotone_table(int m, int max_value, std::mt19937_64& rng);

// Name-based catalog dispatch used by the command line generator. Supported
// names and their parameters are documented by catalog_names(). Graph-valued
// parameters accept "path", "cycle", "star", "complete" with m=, or "kab" with
// a= and b=.
Instance make_catalog(const std::string& name, const std::map<std::string, std::string>& params);
std::vector<std::string> catalog_names();

}  // namespace graphfair
