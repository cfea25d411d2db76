#pragma once

#include <optional>
#include <vector>

#include "graphfair/valuation.hpp"

namespace graphfair {

// True iff every bundle induces a connected subgraph (empty bundles count as
// connected). Requires bundles over the graph's vertex range.
bool is_connected_allocation(const Graph& g, const Allocation& alloc);

// Lowest-index disconnected bundle, if any.
std::optional<int> disconnected_bundle(const Graph& g, const Allocation& alloc);

// True iff `own` is envy-free toward `other` up to k goods under valuation u:
// some set of at most k goods can be removed from `other` so that
// u(own) >= u(other minus removed). For additive valuations removing the k
// highest-valued goods is optimal; for tabulated (monotone) valuations all
// k-subsets are enumerated, capped by the envied bundle size cap.
bool envy_up_to(const Valuation& u, const std::vector<int>& own, const std::vector<int>& other, int k);

struct EnvyWitness {
  int envious = -1;
  int envied = -1;
};

// First (lexicographically by agent pair) violation of EF-k, or nothing.
std::optional<EnvyWitness> efk_violation(const Instance& inst, const Allocation& alloc, int k);
bool is_efk(const Instance& inst, const Allocation& alloc, int k);
bool is_ef(const Instance& inst, const Allocation& alloc);

// EFX: for every pair i, j and every single good g in bundle j,
// u_i(bundle i) >= u_i(bundle j minus g).
std::optional<EnvyWitness> efx_violation(const Instance& inst, const Allocation& alloc);
bool is_efx(const Instance& inst, const Allocation& alloc);

struct AgentMmsReport {
  Rational value;  // u_i of agent i's bundle
  Rational mms;    // agent i's maximin share (no connectivity constraint)
  Rational ratio;  // value / mms, with 1 when mms is zero
};

// Per-agent maximin share ratios. Subject to the exact_mms caps.
std::vector<AgentMmsReport> mms_ratio_report(const Instance& inst, const Allocation& alloc);

// True iff each agent's bundle meets the indivisible proportional share test
// for her own additive valuation. Throws std::invalid_argument on tabulated
// valuations.
bool is_ips_allocation(const Instance& inst, const Allocation& alloc);

}  // namespace graphfair
