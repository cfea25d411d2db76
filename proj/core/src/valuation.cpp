#include "graphfair/valuation.hpp"

#include <bit>
#include <stdexcept>

#include "graphfair/config.hpp"

namespace graphfair {

Rational AdditiveValuation::value(const std::vector<int>& bundle) const {
  Rational sum;
  for (int g : bundle) {
    if (g < 0 || g >= goods()) throw std::invalid_argument("AdditiveValuation: good out of range");
    sum += values_[g];
  }
  return sum;
}

Rational AdditiveValuation::value(std::uint32_t mask) const {
  Rational sum;
  std::uint32_t rest = mask;
  while (rest) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    if (g >= goods()) throw std::invalid_argument("AdditiveValuation: good out of range");
    sum += values_[g];
  }
  return sum;
}

Rational AdditiveValuation::total() const {
  Rational sum;
  for (const Rational& v : values_) sum += v;
  return sum;
}

TabulatedValuation::TabulatedValuation(int goods, std::vector<Rational> table)
    : goods_(goods), table_(std::move(table)) {
  if (goods_ < 0) throw std::invalid_argument("TabulatedValuation: negative goods count");
  if (goods_ > search_caps().table_goods)
    throw CapExceeded("TabulatedValuation: goods count exceeds the table cap");
  if (table_.size() != (std::size_t(1) << goods_))
    throw std::invalid_argument("TabulatedValuation: table must have one entry per bundle");
}

Rational TabulatedValuation::value(const std::vector<int>& bundle) const {
  std::uint32_t mask = 0;
  for (int g : bundle) {
    if (g < 0 || g >= goods_) throw std::invalid_argument("TabulatedValuation: good out of range");
    mask |= std::uint32_t(1) << g;
  }
  return table_[mask];
}

int Valuation::goods() const {
  return is_additive() ? additive()->goods() : tabulated()->goods();
}

Rational Valuation::value(const std::vector<int>& bundle) const {
  return is_additive() ? additive()->value(bundle) : tabulated()->value(bundle);
}

Rational Valuation::value(std::uint32_t mask) const {
  return is_additive() ? additive()->value(mask) : tabulated()->value(mask);
}

Rational Valuation::total() const {
  return is_additive() ? additive()->total() : tabulated()->total();
}

bool is_partition(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.bundles.size()) != inst.agents) return false;
  const int m = inst.goods();
  std::vector<char> seen(m, 0);
  int count = 0;
  for (const auto& bundle : alloc.bundles)
    for (int g : bundle) {
      if (g < 0 || g >= m || seen[g]) return false;
      seen[g] = 1;
      ++count;
    }
  return count == m;
}

std::vector<Violation> validate(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.agents < 1) out.push_back({"agents", "instance needs at least one agent"});
  if (inst.goods() < 1) out.push_back({"goods", "instance needs at least one good"});
  if (!inst.graph.is_connected())
    out.push_back({"connectivity", "goods graph is disconnected"});
  if (static_cast<int>(inst.valuations.size()) != inst.agents)
    out.push_back({"dimension", "valuation count does not match agent count"});

  for (std::size_t i = 0; i < inst.valuations.size(); ++i) {
    const Valuation& u = inst.valuations[i];
    const std::string who = "agent " + std::to_string(i);
    if (u.goods() != inst.goods()) {
      out.push_back({"dimension", who + ": valuation covers " + std::to_string(u.goods()) +
                                      " goods, instance has " + std::to_string(inst.goods())});
      continue;
    }
    if (const AdditiveValuation* a = u.additive()) {
      for (int g = 0; g < a->goods(); ++g)
        if (a->value_of_good(g).is_negative()) {
          out.push_back({"negative", who + ": negative value for good " + std::to_string(g)});
          break;
        }
    } else if (const TabulatedValuation* t = u.tabulated()) {
      if (!t->value(std::uint32_t(0)).is_zero())
        out.push_back({"empty-bundle", who + ": empty bundle must have value zero"});
      const std::uint32_t size = std::uint32_t(1) << t->goods();
      bool monotone = true;
      for (std::uint32_t mask = 1; mask < size && monotone; ++mask)
        for (int g = 0; g < t->goods(); ++g)
          if (mask & (std::uint32_t(1) << g)) {
            if (t->value(mask) < t->value(mask & ~(std::uint32_t(1) << g))) {
              out.push_back({"monotonicity", who + ": value drops when adding good " + std::to_string(g) +
                                                 " to bundle " + std::to_string(mask & ~(std::uint32_t(1) << g))});
              monotone = false;
              break;
            }
          }
    }
  }
  return out;
}

}  // namespace graphfair
