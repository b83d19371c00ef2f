#include "grove/split.hpp"

namespace grove {

std::pair<IndexSet, IndexSet> partition_indices(const IndexSet& cell, const SplitRule& rule,
                                                const Dataset& data) {
  std::pair<IndexSet, IndexSet> out;
  for (std::int32_t r : cell)
    (row_goes_left(rule, data, r) ? out.first : out.second).push_back(r);
  return out;
}

}  // namespace grove
