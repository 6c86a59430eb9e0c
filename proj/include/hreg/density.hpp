#ifndef HREG_DENSITY_HPP
#define HREG_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hreg/complex.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/parallel.hpp"
#include "hreg/rational.hpp"
#include "hreg/rng.hpp"

namespace hreg {

// Conditional probabilities over an empty conditioning event are reported as
// 1 with defined = false; callers multiply them into products where they are
// paired with a zero factor.
struct ConditionalProbability {
  Rational value = 1;
  bool defined = false;
  std::int64_t numerator_count = 0;
  std::int64_t denominator_count = 0;
};

// P[G(e) = top(c) | G has frame(c) at e], edge uniform over the color's index
// set.  Exact scan.
ConditionalProbability relative_density(const Hypergraph& G, const TotalColor& c);

struct DensityRow {
  TotalColor color;
  std::int64_t edges = 0;
  std::int64_t frame_edges = 0;
  Rational density;
};
// One row per realized total color of the index set, canonical color order.
std::vector<DensityRow> density_table(const Hypergraph& G, int ord);

// One color constraint of an embedding problem: the edge of `ord` whose
// vertices are the mapped values of `slots` must have color `expected`.
// Slot s encodes pattern vertex t of part i as s = i*h + t.
struct EmbedConstraint {
  int ord = 0;
  std::vector<int> slots;
  ColorId expected = 0;
};

std::vector<EmbedConstraint> embed_constraints(const Hypergraph& G, const SimplicialComplex& S,
                                               int max_size);
inline std::vector<EmbedConstraint> embed_constraints(const Hypergraph& G,
                                                      const SimplicialComplex& S) {
  return embed_constraints(G, S, S.s());
}

// Number of vertex assignments (h per part, with replacement) satisfying all
// of `need` among those satisfying all of `given`, by exhaustive enumeration
// of the (prod_i n_i)^h maps.  Throws BudgetExceeded when the map space
// exceeds `budget`.
struct EmbedCounts {
  std::int64_t satisfying = 0;  // given and need
  std::int64_t conditioning = 0;  // given only
  std::int64_t total = 0;
};
EmbedCounts count_embeddings(const Hypergraph& G, int h, const std::vector<EmbedConstraint>& need,
                             const std::vector<EmbedConstraint>& given, std::int64_t budget,
                             KernelMode mode = KernelMode::Parallel);

// P over uniform maps of all visible edges of S matching; exact.
Rational embed_probability_exact(const Hypergraph& G, const SimplicialComplex& S,
                                 std::int64_t budget = 10000000,
                                 KernelMode mode = KernelMode::Parallel);

// P of all visible edges matching given that the `condition` edges match;
// condition must be a subset of the visible edges (commonly everything below
// the top size).
ConditionalProbability conditional_embed_probability(const Hypergraph& G,
                                                     const SimplicialComplex& S,
                                                     const std::vector<EmbedConstraint>& condition,
                                                     std::int64_t budget = 10000000,
                                                     KernelMode mode = KernelMode::Parallel);

struct McEstimate {
  double value = 0;
  double ci_half = 0;  // two-sided Hoeffding at `confidence`
  std::int64_t samples = 0;
  double confidence = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of the same probability.  Work is split into fixed
// batches; batch b draws from the stream (seed, b), so the estimate does not
// depend on thread count or scheduling.
McEstimate embed_probability_mc(const Hypergraph& G, const std::vector<EmbedConstraint>& match,
                                int h, std::int64_t samples, double confidence, std::uint64_t seed,
                                KernelMode mode = KernelMode::Parallel);
McEstimate embed_probability_mc(const Hypergraph& G, const SimplicialComplex& S,
                                std::int64_t samples, double confidence, std::uint64_t seed,
                                KernelMode mode = KernelMode::Parallel);

double hoeffding_half_width(std::int64_t samples, double confidence);

}  // namespace hreg

#endif
