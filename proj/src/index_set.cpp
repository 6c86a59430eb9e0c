#include "hreg/index_set.hpp"

#include <algorithm>

namespace hreg {

std::vector<IndexSet> canonical_subsets(IndexSet ground, int max_size) {
  std::vector<IndexSet> out;
  std::uint32_t g = ground.bits;
  // Enumerate all submasks, then sort canonically; ground sets are tiny.
  for (std::uint32_t m = g; m; m = (m - 1) & g) {
    IndexSet s(m);
    if (s.size() <= max_size) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<IndexSet> canonical_proper_subsets(IndexSet I) {
  auto all = canonical_subsets(I, I.size());
  if (!all.empty() && all.back() == I) all.pop_back();
  return all;
}

}  // namespace hreg
