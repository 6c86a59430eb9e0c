#ifndef HREG_REGULARIZE_HPP
#define HREG_REGULARIZE_HPP

#include <vector>

#include "hreg/hypergraph.hpp"
#include "hreg/parallel.hpp"
#include "hreg/pmap.hpp"
#include "hreg/rational.hpp"

namespace hreg {

// s-regularization: every edge e of size <= s is recolored by the trace of
// colors G(e u f), where f runs over tuples of sampled vertices of the parts
// J outside e's index set, for all J with |J| <= s+1-|e|.  Component order is
// canonical: J by (size, lex members) with J = {} first (the old color), and
// within each J the f-tuples lexicographic by sample position.  Edges of size
// > s keep their tables and colors.  Trace classes are interned by structural
// equality in first-occurrence order over the edge scan, so the result is
// deterministic; tables store only realized classes.
Hypergraph s_regularize(const Hypergraph& G, int s, const PartitionwiseMap& phi,
                        KernelMode mode = KernelMode::Parallel);

// Full regularization: applies s = k-1 down to 1 with phis[s-1] at level s.
// phis must have exactly k-1 entries; for k = 1 the graph is returned as-is.
Hypergraph regularize(const Hypergraph& G, const std::vector<PartitionwiseMap>& phis,
                      KernelMode mode = KernelMode::Parallel);

// Upper bound on the number of distinct index-I colors after one (k-1)-step
// regularization with m samples per part, |I| = i:
//   B_i(b, m) = prod_{j=0..k-i} b_{i+j} ^ (C(r-i, j) * m^j).
// b has one entry per size 1..k.  Throws BudgetExceeded when the result would
// exceed max_bits bits.
BigInt color_bound(int r, const std::vector<BigInt>& b, const BigInt& m, int i,
                   std::int64_t max_bits = std::int64_t(1) << 24);

// Recolored-class labels of one index set, relabeled canonically; equal
// vectors mean identical partitions of that edge set.
std::vector<int> color_classes(const Hypergraph& G, IndexSet I);

// Only the frames of one index set's edges after a (k-1)-regularization:
// recolors just the proper-subset ordinals of I and labels I's edges by the
// resulting frame.  Exactly matches frame_class_labels(s_regularize(G, k-1,
// phi), ord) but skips unrelated index sets.
std::vector<int> regularized_frame_labels(const Hypergraph& G, int ord,
                                          const PartitionwiseMap& phi, int* n_classes,
                                          KernelMode mode = KernelMode::Parallel);

}  // namespace hreg

#endif
