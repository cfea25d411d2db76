#include "graphfair/oracles.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "graphfair/checkers.hpp"
#include "graphfair/config.hpp"
#include "graphfair/mms.hpp"

namespace graphfair {

namespace {

std::vector<int> mask_to_bundle(std::uint32_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

// values[mask] = u(mask) for every bundle mask. Requires m <= 25 or so; the
// callers cap m well below that.
std::vector<Rational> bundle_value_table(const Valuation& u) {
  const int m = u.goods();
  std::vector<Rational> values(std::size_t{1} << m);
  if (const AdditiveValuation* add = u.additive()) {
    for (std::uint32_t mask = 1; mask < values.size(); ++mask) {
      const std::uint32_t low = mask & (~mask + 1);
      values[mask] = values[mask ^ low] + add->value_of_good(std::countr_zero(low));
    }
  } else {
    values = u.tabulated()->table();
  }
  return values;
}

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.vertex_count(), 0);
  for (const auto& [a, b] : g.edges()) {
    nb[a] |= std::uint32_t{1} << b;
    nb[b] |= std::uint32_t{1} << a;
  }
  return nb;
}

// connected[mask] = whether mask induces a connected subgraph (empty and
// singleton masks count as connected).
std::vector<char> connected_mask_table(const Graph& g) {
  const int m = g.vertex_count();
  const std::vector<std::uint32_t> nb = neighbor_masks(g);
  std::vector<char> connected(std::size_t{1} << m, 0);
  connected[0] = 1;
  for (std::uint32_t mask = 1; mask < connected.size(); ++mask) {
    std::uint32_t seen = mask & (~mask + 1);
    while (true) {
      std::uint32_t grow = seen;
      std::uint32_t scan = seen;
      while (scan != 0) {
        grow |= nb[std::countr_zero(scan)] & mask;
        scan &= scan - 1;
      }
      if (grow == seen) break;
      seen = grow;
    }
    connected[mask] = seen == mask ? 1 : 0;
  }
  return connected;
}

void check_mms_cap(int n, int m, const char* who) {
  const int cap = n <= 2 ? search_caps().mms_two : search_caps().mms_many;
  if (m > cap) {
    throw CapExceeded(std::string(who) + ": " + std::to_string(m) +
                      " goods exceeds the exhaustive cap of " + std::to_string(cap) +
                      " for n = " + std::to_string(n));
  }
}

// Shared engine behind exact_mms and exact_gmms. `connected` is null for the
// unconstrained variant. Assumes 1 <= n, n <= m, caps already checked.
class MaximinSearch {
 public:
  MaximinSearch(const std::vector<Rational>& values, int n, int m, const std::vector<char>* connected)
      : values_(values), n_(n), m_(m), connected_(connected), full_((std::uint32_t{1} << m) - 1) {
    state_.assign(n + 1, {});
    best_.assign(n + 1, {});
    for (int p = 2; p <= n; ++p) {
      state_[p].assign(std::size_t{1} << m, 0);
      best_[p].assign(std::size_t{1} << m, Rational(0));
    }
  }

  PartitionResult run() {
    PartitionResult result;
    if (n_ == 2) {
      bool found = false;
      std::uint32_t best_mask = 0;
      Rational best;
      for (std::uint32_t t = 1; t < full_; t += 2) {  // masks containing good 0
        const std::uint32_t comp = full_ ^ t;
        if (!part_ok(t) || !part_ok(comp)) continue;
        const Rational cand = std::min(values_[t], values_[comp]);
        if (!found || cand > best) {
          found = true;
          best = cand;
          best_mask = t;
        }
      }
      if (!found) throw GuaranteeViolation("maximin bipartition: no feasible split");
      result.value = best;
      result.bundles = {mask_to_bundle(best_mask), mask_to_bundle(full_ ^ best_mask)};
      return result;
    }
    if (!solve(n_, full_)) throw GuaranteeViolation("maximin partition: no feasible partition");
    result.value = best_[n_][full_];
    reconstruct(n_, full_, result.bundles);
    return result;
  }

 private:
  bool part_ok(std::uint32_t mask) const { return connected_ == nullptr || (*connected_)[mask] != 0; }

  // Max-min value of splitting `mask` into `parts` nonempty bundles; false
  // when infeasible under the connectivity constraint.
  bool solve(int parts, std::uint32_t mask) {
    if (parts == 1) return part_ok(mask);
    if (std::popcount(mask) < parts) return false;
    char& st = state_[parts][mask];
    if (st == 1) return true;
    if (st == 2) return false;
    const std::uint32_t v0 = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ v0;
    bool found = false;
    Rational best;
    // The bundle containing the lowest remaining good is enumerated in
    // ascending mask order; skipping bundles that cannot beat the running best
    // is safe because the minimum never exceeds the bundle's own value.
    for (std::uint32_t t = 0;; t = (t - rest) & rest) {
      const std::uint32_t bundle = t | v0;
      if (bundle != mask && part_ok(bundle) && (!found || values_[bundle] > best)) {
        if (solve(parts - 1, mask ^ bundle)) {
          const Rational cand = std::min(values_[bundle], solved_value(parts - 1, mask ^ bundle));
          if (!found || cand > best) {
            found = true;
            best = cand;
          }
        }
      }
      if (t == rest) break;
    }
    st = found ? 1 : 2;
    if (found) best_[parts][mask] = best;
    return found;
  }

  Rational solved_value(int parts, std::uint32_t mask) {
    if (parts == 1) return values_[mask];
    return best_[parts][mask];
  }

  void reconstruct(int parts, std::uint32_t mask, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
      out.push_back(mask_to_bundle(mask));
      return;
    }
    const Rational target = best_[parts][mask];
    const std::uint32_t v0 = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ v0;
    for (std::uint32_t t = 0;; t = (t - rest) & rest) {
      const std::uint32_t bundle = t | v0;
      if (bundle != mask && part_ok(bundle) && solve(parts - 1, mask ^ bundle)) {
        const Rational cand = std::min(values_[bundle], solved_value(parts - 1, mask ^ bundle));
        if (cand == target) {
          out.push_back(mask_to_bundle(bundle));
          reconstruct(parts - 1, mask ^ bundle, out);
          return;
        }
      }
      if (t == rest) break;
    }
    throw GuaranteeViolation("maximin partition: witness reconstruction failed");
  }

  const std::vector<Rational>& values_;
  int n_;
  int m_;
  const std::vector<char>* connected_;
  std::uint32_t full_;
  std::vector<std::vector<char>> state_;      // 0 unknown, 1 feasible, 2 infeasible
  std::vector<std::vector<Rational>> best_;
};

PartitionResult degenerate_partition(const Valuation& u, int n) {
  // Fewer goods than bundles: the maximin value is zero; pad with empties.
  PartitionResult result;
  result.value = Rational(0);
  result.bundles.assign(n, {});
  for (int gidx = 0; gidx < u.goods(); ++gidx) result.bundles[gidx] = {gidx};
  return result;
}

PartitionResult whole_set_partition(const Valuation& u) {
  PartitionResult result;
  std::vector<int> all(u.goods());
  for (int i = 0; i < u.goods(); ++i) all[i] = i;
  result.value = u.value(all);
  result.bundles = {all};
  return result;
}

PartitionResult maximin_partition(const Valuation& u, int n, const std::vector<char>* connected,
                                  const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": needs at least one bundle");
  const int m = u.goods();
  if (m < n) return degenerate_partition(u, n);
  if (n == 1) return whole_set_partition(u);
  check_mms_cap(n, m, who);
  const std::vector<Rational> values = bundle_value_table(u);
  return MaximinSearch(values, n, m, connected).run();
}

}  // namespace

PartitionResult exact_mms(const Valuation& u, int n) {
  return maximin_partition(u, n, nullptr, "exact_mms");
}

PartitionResult exact_gmms(const Graph& g, const Valuation& u, int n) {
  if (g.vertex_count() != u.goods()) {
    throw std::invalid_argument("exact_gmms: graph size does not match the valuation");
  }
  if (!g.is_connected()) throw std::invalid_argument("exact_gmms: graph must be connected");
  if (n < 1) throw std::invalid_argument("exact_gmms: needs at least one bundle");
  if (u.goods() < n || n == 1) {
    return maximin_partition(u, n, nullptr, "exact_gmms");  // singletons and the whole set are connected
  }
  check_mms_cap(n, u.goods(), "exact_gmms");
  const std::vector<char> connected = connected_mask_table(g);
  return maximin_partition(u, n, &connected, "exact_gmms");
}

PartitionResult exact_gmms_tree(const Graph& g, const Valuation& u, int n) {
  if (g.vertex_count() != u.goods()) {
    throw std::invalid_argument("exact_gmms_tree: graph size does not match the valuation");
  }
  if (!g.is_tree()) throw std::invalid_argument("exact_gmms_tree: graph must be a tree");
  if (n < 1) throw std::invalid_argument("exact_gmms_tree: needs at least one bundle");
  const int m = g.vertex_count();
  if (m < n) return degenerate_partition(u, n);
  if (n == 1) return whole_set_partition(u);

  const int edge_count = m - 1;
  const int cuts = n - 1;
  long long combos = 1;
  for (int i = 0; i < cuts; ++i) {
    combos = combos * (edge_count - i) / (i + 1);
    if (combos > 5'000'000) throw CapExceeded("exact_gmms_tree: too many edge cuts to enumerate");
  }

  const std::vector<std::pair<int, int>>& edges = g.edges();
  std::vector<int> pick(cuts);
  for (int i = 0; i < cuts; ++i) pick[i] = i;
  bool found = false;
  PartitionResult best;
  std::vector<int> parent(m);
  while (true) {
    // Union-find over the kept edges; the components are the bundles.
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
    std::vector<std::vector<int>> bundles;
    bundles.reserve(n);
    for (int v = 0; v < m; ++v) {
      if (!groups[v].empty()) bundles.push_back(std::move(groups[v]));
    }
    Rational low = u.value(bundles[0]);
    for (std::size_t i = 1; i < bundles.size(); ++i) low = std::min(low, u.value(bundles[i]));
    if (!found || low > best.value) {
      found = true;
      best.value = low;
      best.bundles = std::move(bundles);
    }

    int j = cuts - 1;
    while (j >= 0 && pick[j] == edge_count - cuts + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < cuts; ++t) pick[t] = pick[t - 1] + 1;
  }
  if (!found) throw GuaranteeViolation("exact_gmms_tree: no edge cut enumerated");
  return best;
}

Rational poc_ratio(const Graph& g, const Valuation& u, int n) {
  const Rational mms = exact_mms(u, n).value;
  if (mms == Rational(0)) return Rational(1);
  return exact_gmms(g, u, n).value / mms;
}

PocSearchResult poc_search(const Graph& g, int n, int max_value, long long budget, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("poc_search: needs at least one agent");
  if (max_value < 0) throw std::invalid_argument("poc_search: negative value range");
  if (budget < 1) throw std::invalid_argument("poc_search: empty budget");
  if (!g.is_connected()) throw std::invalid_argument("poc_search: graph must be connected");
  const int m = g.vertex_count();
  check_mms_cap(n, m, "poc_search");

  PocSearchResult result;
  std::vector<Rational> current(m, Rational(0));
  auto evaluate = [&](const std::vector<Rational>& values) {
    ++result.evaluations;
    return poc_ratio(g, AdditiveValuation(values), n);
  };
  auto offer = [&](const std::vector<Rational>& values, const Rational& ratio) {
    if (result.values.empty() || ratio < result.ratio) {
      result.ratio = ratio;
      result.values = values;
    }
  };

  double grid = 1.0;
  for (int i = 0; i < m; ++i) grid *= static_cast<double>(max_value) + 1.0;
  if (grid <= 1e7) {
    result.exhaustive = true;
    while (true) {
      offer(current, evaluate(current));
      int pos = m - 1;
      while (pos >= 0 && current[pos] == Rational(max_value)) {
        current[pos] = Rational(0);
        --pos;
      }
      if (pos < 0) break;
      current[pos] = current[pos] + Rational(1);
    }
    return result;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, max_value);
  while (result.evaluations < budget) {
    for (int i = 0; i < m; ++i) current[i] = Rational(dist(rng));
    Rational local = evaluate(current);
    offer(current, local);
    bool improved = true;
    while (improved && result.evaluations < budget) {
      improved = false;
      for (int v = 0; v < m && !improved; ++v) {
        const Rational keep = current[v];
        for (int c = 0; c <= max_value && !improved; ++c) {
          if (Rational(c) == keep) continue;
          if (result.evaluations >= budget) break;
          current[v] = Rational(c);
          const Rational ratio = evaluate(current);
          if (ratio < local) {
            local = ratio;
            offer(current, local);
            improved = true;
          } else {
            current[v] = keep;
          }
        }
      }
    }
  }
  return result;
}

namespace {

class ConnectedAllocationSearch {
 public:
  ConnectedAllocationSearch(const Instance& inst, const AllocationPredicate& predicate)
      : inst_(inst), predicate_(predicate), connected_(connected_mask_table(inst.graph)) {
    if (predicate.kind == AllocationPredicate::Kind::MmsFraction) {
      for (int i = 0; i < inst_.agents; ++i) {
        thresholds_.push_back(predicate.alpha * exact_mms(inst_.valuations[i], inst_.agents).value);
      }
    }
    if (predicate.kind == AllocationPredicate::Kind::Ips) {
      for (const Valuation& u : inst_.valuations) {
        if (!u.is_additive()) {
          throw std::invalid_argument("exists_connected_allocation: the proportional-share predicate needs additive valuations");
        }
      }
    }
  }

  std::optional<Allocation> run() {
    const std::uint32_t full = (std::uint32_t{1} << inst_.goods()) - 1;
    if (recurse(full)) return found_;
    return std::nullopt;
  }

 private:
  bool recurse(std::uint32_t remaining) {
    if (remaining == 0) return try_assignments();
    if (static_cast<int>(parts_.size()) == inst_.agents) return false;
    const std::uint32_t v0 = remaining & (~remaining + 1);
    const std::uint32_t rest = remaining ^ v0;
    for (std::uint32_t t = 0;; t = (t - rest) & rest) {
      const std::uint32_t part = t | v0;
      if (connected_[part] != 0) {
        parts_.push_back(part);
        if (recurse(remaining ^ part)) return true;
        parts_.pop_back();
      }
      if (t == rest) break;
    }
    return false;
  }

  bool try_assignments() {
    assignment_.assign(parts_.size(), -1);
    return assign(0, 0);
  }

  bool assign(std::size_t idx, std::uint32_t used_agents) {
    if (idx == parts_.size()) return check_assignment();
    for (int a = 0; a < inst_.agents; ++a) {
      if ((used_agents >> a) & 1u) continue;
      assignment_[idx] = a;
      if (assign(idx + 1, used_agents | (std::uint32_t{1} << a))) return true;
    }
    return false;
  }

  bool check_assignment() {
    Allocation alloc;
    alloc.bundles.assign(inst_.agents, {});
    for (std::size_t idx = 0; idx < parts_.size(); ++idx) {
      alloc.bundles[assignment_[idx]] = mask_to_bundle(parts_[idx]);
    }
    if (!satisfies(alloc)) return false;
    found_ = std::move(alloc);
    return true;
  }

  bool satisfies(const Allocation& alloc) {
    switch (predicate_.kind) {
      case AllocationPredicate::Kind::EnvyFree:
        return is_ef(inst_, alloc);
      case AllocationPredicate::Kind::EnvyFreeUpTo:
        return is_efk(inst_, alloc, predicate_.k);
      case AllocationPredicate::Kind::EnvyFreeUpToAny:
        return is_efx(inst_, alloc);
      case AllocationPredicate::Kind::MmsFraction:
        for (int i = 0; i < inst_.agents; ++i) {
          if (inst_.valuations[i].value(alloc.bundles[i]) < thresholds_[i]) return false;
        }
        return true;
      case AllocationPredicate::Kind::Ips:
        for (int i = 0; i < inst_.agents; ++i) {
          if (!is_ips_bundle(*inst_.valuations[i].additive(), alloc.bundles[i], inst_.agents, i)) {
            return false;
          }
        }
        return true;
    }
    return false;
  }

  const Instance& inst_;
  AllocationPredicate predicate_;
  std::vector<char> connected_;
  std::vector<Rational> thresholds_;
  std::vector<std::uint32_t> parts_;
  std::vector<int> assignment_;
  Allocation found_;
};

}  // namespace

std::optional<Allocation> exists_connected_allocation(const Instance& inst,
                                                      const AllocationPredicate& predicate) {
  if (inst.agents < 1) throw std::invalid_argument("exists_connected_allocation: needs agents");
  if (static_cast<int>(inst.valuations.size()) != inst.agents) {
    throw std::invalid_argument("exists_connected_allocation: one valuation per agent required");
  }
  for (const Valuation& u : inst.valuations) {
    if (u.goods() != inst.goods()) {
      throw std::invalid_argument("exists_connected_allocation: valuation size mismatch");
    }
  }
  check_mms_cap(inst.agents, inst.goods(), "exists_connected_allocation");
  return ConnectedAllocationSearch(inst, predicate).run();
}

int guaranteed_efk_bruteforce(const Graph& g) {
  const int m = g.vertex_count();
  if (m > search_caps().efk_binary) {
    throw CapExceeded("guaranteed_efk_bruteforce: " + std::to_string(m) +
                      " vertices exceeds the binary enumeration cap of " +
                      std::to_string(search_caps().efk_binary));
  }
  if (!g.is_connected()) {
    throw std::invalid_argument("guaranteed_efk_bruteforce: graph must be connected");
  }
  int worst = 0;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
    std::vector<Rational> values(m, Rational(0));
    for (int v = 0; v < m; ++v) {
      if ((bits >> v) & 1u) values[v] = Rational(1);
    }
    Instance inst{2, g, {AdditiveValuation(values), AdditiveValuation(values)}};
    int k = worst;  // every smaller bound already failed for some valuation
    while (true) {
      if (k > m) throw GuaranteeViolation("guaranteed_efk_bruteforce: no bound up to m worked");
      if (exists_connected_allocation(inst, AllocationPredicate::efk(k)).has_value()) break;
      ++k;
    }
    worst = std::max(worst, k);
  }
  return worst;
}

}  // namespace graphfair
