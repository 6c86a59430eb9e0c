#include "hreg/pmap.hpp"

namespace hreg {

PartitionwiseMap sample_map(const Hypergraph& G, int m, Rng& rng) {
  if (m < 0) throw ValidationError("sample size must be >= 0");
  PartitionwiseMap p;
  p.samples.resize(G.r());
  for (int i = 0; i < G.r(); ++i) {
    p.samples[i].resize(m);
    for (int j = 0; j < m; ++j) p.samples[i][j] = rng.uniform_int(G.part_sizes()[i]);
  }
  return p;
}

PartitionwiseMap union_maps(const PartitionwiseMap& a, const PartitionwiseMap& b) {
  if (a.parts() != b.parts()) throw ValidationError("map union: part counts differ");
  PartitionwiseMap out = a;
  for (int i = 0; i < a.parts(); ++i)
    out.samples[i].insert(out.samples[i].end(), b.samples[i].begin(), b.samples[i].end());
  return out;
}

}  // namespace hreg
