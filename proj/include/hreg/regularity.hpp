#ifndef HREG_REGULARITY_HPP
#define HREG_REGULARITY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hreg/complex.hpp"
#include "hreg/density.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/parallel.hpp"
#include "hreg/rational.hpp"

namespace hreg {

// The constants of the main estimate for parameters (k, h, r, b_k, eps).
// eps1 is a perfect square by construction, so sqrt_eps1 is exact; C is
// carried by its square, which is rational.
struct Constants {
  int k = 0, h = 0, r = 0;
  BigInt b_k;
  Rational eps;
  Rational eps1;
  Rational sqrt_eps1;
  Rational c_squared;
};
Constants regularity_constants(int k, int h, int r, const BigInt& b_k, const Rational& eps);

// Total color -> error value.  Values are exact nonnegative reals; colors
// not present fall back to the default (0 unless set otherwise).
class ErrorFunction {
 public:
  void set(const TotalColor& c, const NonnegReal& v);
  void set_default(const NonnegReal& v) { default_ = v; }
  const NonnegReal& at(const TotalColor& c) const;
  const std::map<TotalColor, NonnegReal>& entries() const { return entries_; }
  bool all_rational() const;

 private:
  std::map<TotalColor, NonnegReal> entries_;
  NonnegReal default_;
};

struct EtaConfig {
  bool exact = true;
  std::int64_t budget = 10000000;   // exact: cap on |Phi(mh)|
  std::int64_t samples = 20000;     // Monte Carlo path
  double confidence = 0.99;
  std::uint64_t seed = 1;
  KernelMode mode = KernelMode::Parallel;
};

// Mean squared deviation, over random size-(m*h) maps and edges e* of the
// color's frame event, between the frame-class conditional top-color
// probability and the global relative density.
struct EtaStatistic {
  TotalColor color;
  int m = 0;
  bool defined = false;  // false when the frame event is empty
  bool exact = true;
  Rational value;        // exact path
  McEstimate mc;         // sampling path
};
EtaStatistic eta_statistic(const Hypergraph& G, const TotalColor& c, int m, int h,
                           const EtaConfig& cfg);

// Colors whose restrictions have a large error entry or a small relative
// density.  `delta_low` supplies errors for proper restrictions; with
// `include_full_delta` the color's own entry participates too (the removal
// variant).  Thresholds sqrt(eps1)/|C| and 2 sqrt(eps1)/|C| are compared
// exactly through squares.
std::set<TotalColor> bad_colors(const Hypergraph& G, const ErrorFunction& delta_low,
                                const Rational& eps1, bool include_full_delta);

// Smallest rational error table making every complex of the family pass the
// product-interval check: deviations are split uniformly over each complex's
// visible edges, then widened until the family verifies.
ErrorFunction empirical_error_function(const Hypergraph& G, int h,
                                       const std::vector<SimplicialComplex>& family,
                                       std::int64_t embed_budget = 10000000,
                                       KernelMode mode = KernelMode::Parallel);

// The proof-shaped error function: 1 on bad colors, C*sqrt(eta) elsewhere on
// full-size colors, `lower` below the top size.  Requires the exact eta path.
ErrorFunction faithful_error_function(const Hypergraph& G, const ErrorFunction& lower,
                                      const Constants& cst, int m, const EtaConfig& eta_cfg);

struct FamilyCheck {
  std::string complex_repr;
  bool pass = false;
  bool exact = false;
  Rational embed;       // exact path
  McEstimate embed_mc;  // sampling path
  Rational lower, upper;
  Rational margin;  // min(embed - lower, upper - embed) when exact
  std::string note;
};

struct VerifyConfig {
  bool exact = true;
  std::int64_t embed_budget = 10000000;
  std::int64_t samples = 20000;
  double confidence = 0.99;
  std::uint64_t seed = 1;
  KernelMode mode = KernelMode::Parallel;
};

struct RegularityCertificate {
  int h = 0;
  bool all_pass = false;
  bool exact = true;
  std::vector<FamilyCheck> checks;
  Rational bound;  // max over index sets of |C_I| * E[delta at the edge color]
  bool bound_exact = true;
  std::uint64_t family_digest = 0;
};

// Checks every complex of the family against prod (d -. delta) <= embed <=
// prod (d +. delta) and reports the expectation bound.  Exact when the error
// values and path allow it; otherwise certifies conservatively with rational
// brackets of the error values.
RegularityCertificate verify_error_function(const Hypergraph& G, const ErrorFunction& delta, int h,
                                            const std::vector<SimplicialComplex>& family,
                                            const VerifyConfig& cfg);

struct RegBoundConfig {
  std::int64_t family_budget = 200000;  // exhaustive enumeration cap
  int sampled_family = 64;              // fallback: sampled complexes
  std::int64_t embed_budget = 10000000;
  std::uint64_t seed = 1;
  KernelMode mode = KernelMode::Parallel;
};

struct RegBoundResult {
  ErrorFunction delta;
  RegularityCertificate certificate;
  bool family_exhaustive = false;
  int family_size = 0;
};

// Builds a family of h-vertex complexes of G (exhaustive when it fits the
// budget), fits the empirical error function, and verifies it.
RegBoundResult reg_upper_bound(const Hypergraph& G, int h, const RegBoundConfig& cfg);

// Interval endpoints prod max(0, d - delta) and prod min(1, d + delta) for
// the visible edges of S; exact path requires rational deltas.
struct EmbedInterval {
  Rational lower, upper;
  bool exact = true;
};
EmbedInterval embed_interval(const Hypergraph& G, const SimplicialComplex& S,
                             const ErrorFunction& delta);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace hreg

#endif
