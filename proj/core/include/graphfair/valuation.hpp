#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "graphfair/graph.hpp"
#include "graphfair/rational.hpp"

namespace graphfair {

// Additive valuation: the value of a bundle is the sum of its per-good values.
// Values are expected to be nonnegative; validate() reports violations rather
// than the constructor throwing, so that malformed data can be inspected.
class AdditiveValuation {
 public:
  explicit AdditiveValuation(std::vector<Rational> values) : values_(std::move(values)) {}

  int goods() const { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value_of_good(int g) const { return values_[g]; }

  Rational value(const std::vector<int>& bundle) const;
  Rational value(std::uint32_t mask) const;  // requires goods() <= 31
  Rational total() const;

 private:
  std::vector<Rational> values_;
};

// Tabulated valuation: one explicit value per bundle, indexed by bitmask.
// Intended invariants (checked by validate, not the constructor): value of the
// empty bundle is zero and values are monotone under set inclusion. The table
// size is capped because it holds 2^m entries.
class TabulatedValuation {
 public:
  TabulatedValuation(int goods, std::vector<Rational> table);

  int goods() const { return goods_; }
  const std::vector<Rational>& table() const { return table_; }

  Rational value(const std::vector<int>& bundle) const;
  Rational value(std::uint32_t mask) const { return table_[mask]; }
  Rational total() const { return table_.back(); }

 private:
  int goods_;
  std::vector<Rational> table_;
};

// Either valuation kind behind one interface.
class Valuation {
 public:
  Valuation(AdditiveValuation v) : v_(std::move(v)) {}     // NOLINT: implicit by design
  Valuation(TabulatedValuation v) : v_(std::move(v)) {}    // NOLINT: implicit by design

  bool is_additive() const { return std::holds_alternative<AdditiveValuation>(v_); }
  const AdditiveValuation* additive() const { return std::get_if<AdditiveValuation>(&v_); }
  const TabulatedValuation* tabulated() const { return std::get_if<TabulatedValuation>(&v_); }

  int goods() const;
  Rational value(const std::vector<int>& bundle) const;
  Rational value(std::uint32_t mask) const;
  Rational total() const;

 private:
  std::variant<AdditiveValuation, TabulatedValuation> v_;
};

// A fair division instance: n agents, goods arranged as the vertices of a
// connected graph, one valuation per agent.
struct Instance {
  int agents = 0;
  Graph graph;
  std::vector<Valuation> valuations;

  int goods() const { return graph.vertex_count(); }
};

// A complete allocation: bundles[i] is agent i's set of goods, sorted
// ascending. The bundles must be disjoint and cover all goods; empty bundles
// are allowed.
struct Allocation {
  std::vector<std::vector<int>> bundles;
};

// True iff `alloc` has one bundle per agent and the bundles partition the
// goods of `inst`.
bool is_partition(const Instance& inst, const Allocation& alloc);

struct Violation {
  std::string code;
  std::string message;
};

// Data-level checks: graph connectivity, valuation dimensions, nonnegativity,
// zero empty-bundle value and monotonicity of tabulated valuations. Returns an
// empty list when the instance is well formed.
std::vector<Violation> validate(const Instance& inst);

}  // namespace graphfair
