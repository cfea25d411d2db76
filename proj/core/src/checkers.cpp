#include "graphfair/checkers.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphfair/config.hpp"
#include "graphfair/mms.hpp"
#include "graphfair/oracles.hpp"

namespace graphfair {

namespace {

void require_partition(const Instance& inst, const Allocation& alloc) {
  if (!is_partition(inst, alloc)) {
    throw std::invalid_argument("allocation does not partition the goods of the instance");
  }
}

}  // namespace

bool is_connected_allocation(const Graph& g, const Allocation& alloc) {
  return !disconnected_bundle(g, alloc).has_value();
}

std::optional<int> disconnected_bundle(const Graph& g, const Allocation& alloc) {
  for (int i = 0; i < static_cast<int>(alloc.bundles.size()); ++i) {
    if (!is_connected_subset(g, alloc.bundles[i])) return i;
  }
  return std::nullopt;
}

bool envy_up_to(const Valuation& u, const std::vector<int>& own, const std::vector<int>& other, int k) {
  if (k < 0) throw std::invalid_argument("envy_up_to: negative k");
  const Rational own_value = u.value(own);
  const int sz = static_cast<int>(other.size());
  if (k >= sz) return own_value >= u.value(std::vector<int>{});
  if (k == 0) return own_value >= u.value(other);

  if (const AdditiveValuation* add = u.additive()) {
    // Removing the k highest-valued goods minimizes the remaining sum.
    std::vector<int> sorted = other;
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      return add->value_of_good(a) > add->value_of_good(b);
    });
    Rational rest = add->value(other);
    for (int i = 0; i < k; ++i) rest = rest - add->value_of_good(sorted[i]);
    return own_value >= rest;
  }

  if (sz > search_caps().envy_subset) {
    throw CapExceeded("envy_up_to: envied bundle of size " + std::to_string(sz) +
                      " exceeds the subset enumeration cap");
  }
  // Monotone table: removing more goods never hurts, so only subsets of size
  // exactly k need checking.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<int> kept;
    kept.reserve(sz - k);
    int next = 0;
    for (int i = 0; i < sz; ++i) {
      if (next < k && pick[next] == i) {
        ++next;
      } else {
        kept.push_back(other[i]);
      }
    }
    if (own_value >= u.value(kept)) return true;
    int j = k - 1;
    while (j >= 0 && pick[j] == sz - k + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return false;
}

std::optional<EnvyWitness> efk_violation(const Instance& inst, const Allocation& alloc, int k) {
  require_partition(inst, alloc);
  for (int i = 0; i < inst.agents; ++i) {
    for (int j = 0; j < inst.agents; ++j) {
      if (i == j) continue;
      if (!envy_up_to(inst.valuations[i], alloc.bundles[i], alloc.bundles[j], k)) {
        return EnvyWitness{i, j};
      }
    }
  }
  return std::nullopt;
}

bool is_efk(const Instance& inst, const Allocation& alloc, int k) {
  return !efk_violation(inst, alloc, k).has_value();
}

bool is_ef(const Instance& inst, const Allocation& alloc) { return is_efk(inst, alloc, 0); }

std::optional<EnvyWitness> efx_violation(const Instance& inst, const Allocation& alloc) {
  require_partition(inst, alloc);
  for (int i = 0; i < inst.agents; ++i) {
    const Rational own_value = inst.valuations[i].value(alloc.bundles[i]);
    for (int j = 0; j < inst.agents; ++j) {
      if (i == j) continue;
      const std::vector<int>& other = alloc.bundles[j];
      for (int drop = 0; drop < static_cast<int>(other.size()); ++drop) {
        std::vector<int> kept;
        kept.reserve(other.size() - 1);
        for (int t = 0; t < static_cast<int>(other.size()); ++t) {
          if (t != drop) kept.push_back(other[t]);
        }
        if (own_value < inst.valuations[i].value(kept)) return EnvyWitness{i, j};
      }
    }
  }
  return std::nullopt;
}

bool is_efx(const Instance& inst, const Allocation& alloc) {
  return !efx_violation(inst, alloc).has_value();
}

std::vector<AgentMmsReport> mms_ratio_report(const Instance& inst, const Allocation& alloc) {
  require_partition(inst, alloc);
  std::vector<AgentMmsReport> reports;
  reports.reserve(inst.agents);
  for (int i = 0; i < inst.agents; ++i) {
    AgentMmsReport rep;
    rep.value = inst.valuations[i].value(alloc.bundles[i]);
    rep.mms = exact_mms(inst.valuations[i], inst.agents).value;
    rep.ratio = rep.mms == Rational(0) ? Rational(1) : rep.value / rep.mms;
    reports.push_back(rep);
  }
  return reports;
}

bool is_ips_allocation(const Instance& inst, const Allocation& alloc) {
  require_partition(inst, alloc);
  for (int i = 0; i < inst.agents; ++i) {
    const AdditiveValuation* add = inst.valuations[i].additive();
    if (!add) throw std::invalid_argument("is_ips_allocation: requires additive valuations");
    if (!is_ips_bundle(*add, alloc.bundles[i], inst.agents, i)) return false;
  }
  return true;
}

}  // namespace graphfair
