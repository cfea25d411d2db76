#include "graphfair/config.hpp"

namespace graphfair {

SearchCaps& search_caps() {
  static SearchCaps caps;
  return caps;
}

void apply_cap_override(int cap) {
  SearchCaps& c = search_caps();
  c.linked = cap;
  c.mms_two = cap;
  c.mms_many = cap;
  c.efk_binary = cap;
  c.envy_subset = cap;
  c.table_goods = cap;
}

}  // namespace graphfair
