#pragma once

#include <stdexcept>
#include <string>

namespace graphfair {

// Size caps for the exhaustive searches. Every oracle that enumerates an
// exponential space checks the relevant cap first and throws CapExceeded
// instead of silently running forever. The defaults keep each oracle call in
// the sub-second range on desktop hardware.
struct SearchCaps {
  int linked = 14;       // is_ab_linked: vertex count
  int mms_two = 14;      // exact_mms / exact_gmms, n == 2: goods count
  int mms_many = 12;     // exact_mms / exact_gmms, n >= 3: goods count
  int efk_binary = 10;   // guaranteed_efk_bruteforce: vertex count
  int envy_subset = 15;  // envy_up_to on tabulated valuations: envied bundle size
  int table_goods = 20;  // TabulatedValuation: goods count (table has 2^m entries)
};

// Process-wide caps. The GRAPHFAIR_CAP environment variable, applied by the
// command line tool, overrides all of them with a single value.
SearchCaps& search_caps();

// Sets every cap to `cap`. Used for the GRAPHFAIR_CAP override.
void apply_cap_override(int cap);

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a procedure whose success is mathematically guaranteed under its
// preconditions fails to produce a result. Reaching it means a defect, not an
// unlucky input.
class GuaranteeViolation : public std::logic_error {
 public:
  explicit GuaranteeViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace graphfair
