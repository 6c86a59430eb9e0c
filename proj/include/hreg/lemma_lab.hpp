#ifndef HREG_LEMMA_LAB_HPP
#define HREG_LEMMA_LAB_HPP

#include <cstdint>
#include <vector>

#include "hreg/complex.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/rational.hpp"
#include "hreg/regularity.hpp"

namespace hreg {

// Finite probability space with two equivalence relations given as class
// labels and a rational variable; fine must refine coarse.
struct NestedEquivalence {
  std::vector<int> fine, coarse;
  std::vector<Rational> x;
};

struct CsMargin {
  Rational lhs;  // E[(E[X | fine])^2]
  Rational rhs;  // E[(E[X | coarse])^2]
  Rational margin;
};
// Second moments of conditional means grow under refinement; margin >= 0.
CsMargin check_nested_cauchy_schwarz(const NestedEquivalence& inst);

struct CountingCheck {
  bool applicable = false;  // frame event nonempty
  int top_count = 0;
  Rational lhs;  // |P[tops match | lowers match] - prod d|
  Rational rhs;  // |V_k| max_D |E[prod (ind - d) | lowers match]|
  bool holds = false;
};
// Exhaustive evaluation of the counting-error inequality for one (G, S).
CountingCheck check_counting_error_bound(const Hypergraph& G, const SimplicialComplex& S,
                                         std::int64_t budget = 10000000);

// One rational value in [-1,1] per host color, for each visible top edge of S
// in canonical edge order.
struct TestFunctional {
  std::vector<std::vector<Rational>> f;
};

struct MeanSquareCheck {
  bool delta_verified = false;
  Rational lhs_d, rhs_d;  // both sides of the unconditioned square bound
  bool d_holds = false;
  bool guard = false;       // delta small and m large
  bool c_applicable = false;  // conditioning events nonempty
  Rational lhs_c, rhs_c;  // both sides of the conditioned variant
  bool c_holds = false;
};
// Exhaustive evaluation of the mean-square correlation bound at one top edge
// e0 (index into the canonical list of visible top edges).  delta must verify
// exactly as a (k-1, 2h)-error function against the exhaustive family, else
// this refuses.
MeanSquareCheck check_mean_square_bound(const Hypergraph& G, const SimplicialComplex& S,
                                        const TestFunctional& F, int m,
                                        const ErrorFunction& delta, int e0_index = 0,
                                        std::int64_t budget = 10000000);

}  // namespace hreg

#endif
