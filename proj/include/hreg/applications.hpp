#ifndef HREG_APPLICATIONS_HPP
#define HREG_APPLICATIONS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hreg/hypergraph.hpp"
#include "hreg/parallel.hpp"
#include "hreg/rational.hpp"
#include "hreg/removal.hpp"

namespace hreg {

// Subset of the discrete simplex T(N,k) = { x in [N]_0^{k+1} : sum = N-1 }.
struct SimplexSet {
  int N = 0, k = 0;
  std::set<std::vector<int>> points;

  static SimplexSet from_points(int N, int k, const std::vector<std::vector<int>>& pts);
  bool contains(const std::vector<int>& p) const { return points.count(p) != 0; }
};

// Subset of the box [N]_0^r.
struct GridSet {
  int N = 0, r = 0;
  std::set<std::vector<int>> points;

  static GridSet from_points(int N, int r, const std::vector<std::vector<int>>& pts);
  bool contains(const std::vector<int>& p) const { return points.count(p) != 0; }
};

// (k+1)-partite k-bounded graph on parts [N]_0 with b = (1,..,1,2); an edge
// of index set I is red iff it agrees with some member of S on I.
Hypergraph corner_hypergraph(const SimplexSet& S);
constexpr ColorId kRed = 0;
constexpr ColorId kBlue = 1;

// All full-size edges red, one vertex per part.
UniformPattern all_red_pattern(int k);

struct CornerSolution {
  std::vector<int> a;   // in Z^{k+1}, off the simplex
  long long c = 0;      // N-1 - sum a, nonzero
};

struct CornerConfig {
  std::int64_t budget = 100000000;
  KernelMode mode = KernelMode::Parallel;
};

// First a in lexicographic order with a + c E_{k+1} inside S and c != 0.
std::optional<CornerSolution> find_simplex_corner(const SimplexSet& S, const CornerConfig& cfg);

// Symmetrization: 2x is an integer vector in [2N]_0^r; T = {t in S : 2x - t
// in S}.  Exhaustive over all centers when trials covers the space, else
// seeded sampling; best (largest) T wins, first maximizer kept.
struct Symmetrization {
  std::vector<int> two_x;
  GridSet T;
  Rational target;  // (0.98/2^r) * density^2 * N^r
  bool meets_target = false;
  bool exhaustive = false;
};
Symmetrization symmetrize_set(const GridSet& S, std::int64_t trials, std::uint64_t seed);

// Integer matrix with columns F'\{0} in lexicographic order, where F' is F
// translated by its lexicographically least element; maps E_{r'} u {0} onto
// F' exactly.
struct PatternReduction {
  std::vector<int> f0;                        // the translation
  std::vector<std::vector<int>> columns;      // r' columns of length r
  int r_prime = 0;
};
PatternReduction pattern_reduction(const std::vector<std::vector<int>>& F);

struct ConfigurationResult {
  std::vector<int> a;  // anchor for the original F
  long long c = 0;     // in [1, N]
  std::vector<std::vector<int>> witnesses;  // a + c f, each verified in S
  std::string engine;  // "lift" or "scan"
};

struct FindConfig {
  std::int64_t budget = 100000000;
  std::int64_t symmetrize_trials = 512;
  std::uint64_t seed = 1;
  KernelMode mode = KernelMode::Parallel;
};

// Homothetic copy a + cF inside S with c >= 1, or none.  Tries the
// symmetrize/reduce/corner-lift pipeline first, then falls back to the
// exhaustive scan; results are verified by membership before returning.
std::optional<ConfigurationResult> find_configuration(const GridSet& S,
                                                      const std::vector<std::vector<int>>& F,
                                                      const FindConfig& cfg);

// Arithmetic progression of length m in S: find_configuration with F =
// {0, 1, ..., m-1} in dimension 1.
std::optional<ConfigurationResult> find_ap(const GridSet& S, int m, const FindConfig& cfg);

// Every (a, c) with c in [1, N] and a + cF inside S, sorted by (a, c).
// Ground truth for the pipeline.
std::vector<std::pair<std::vector<int>, long long>> brute_force_oracle(
    const GridSet& S, const std::vector<std::vector<int>>& F, std::int64_t budget,
    KernelMode mode = KernelMode::Parallel);

}  // namespace hreg

#endif
