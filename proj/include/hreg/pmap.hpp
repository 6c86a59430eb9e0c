#ifndef HREG_PMAP_HPP
#define HREG_PMAP_HPP

#include <vector>

#include "hreg/hypergraph.hpp"
#include "hreg/rng.hpp"

namespace hreg {

// Partitionwise map: a finite list of sampled vertices per part.  Samples are
// positions, not sets: repeats stay distinct, and enumeration over tuples of
// sample positions counts multiplicity accordingly.
struct PartitionwiseMap {
  std::vector<std::vector<int>> samples;

  int parts() const { return static_cast<int>(samples.size()); }
  bool uniform_size(int m) const {
    for (const auto& s : samples)
      if (static_cast<int>(s.size()) != m) return false;
    return true;
  }
  static PartitionwiseMap empty(int r) {
    PartitionwiseMap p;
    p.samples.assign(r, {});
    return p;
  }
};

// m iid uniform vertices per part (with replacement); deterministic in rng.
PartitionwiseMap sample_map(const Hypergraph& G, int m, Rng& rng);

// Disjoint-domain union: b's samples appended after a's, per part.
PartitionwiseMap union_maps(const PartitionwiseMap& a, const PartitionwiseMap& b);

}  // namespace hreg

#endif
