#ifndef HREG_REMOVAL_HPP
#define HREG_REMOVAL_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hreg/density.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/regularity.hpp"

namespace hreg {

// h-vertex k-uniform pattern: only full-size edges carry colors (-1 means
// invisible/unconstrained); sizes below k are implicitly monochrome.  `top`
// is aligned with the canonical list of size-k index sets, each entry a flat
// h^k array in lexicographic tuple order.
struct UniformPattern {
  int r = 0, k = 0, h = 0;
  std::vector<std::vector<ColorId>> top;

  static UniformPattern blank(int r, int k, int h);
  std::vector<IndexSet> top_sets() const;
  std::int64_t cell_count() const;  // h^k
};

void validate_pattern(const UniformPattern& F, const Hypergraph& G);

// Embedding constraints of the pattern's visible cells against G.
std::vector<EmbedConstraint> pattern_constraints(const UniformPattern& F, const Hypergraph& G);

// Copy of G with every full-size edge whose total color in Gstar lies in
// `bad` recolored to spare[ordinal]; lower sizes untouched.  Gstar must share
// G's shape (a regularization of it).
Hypergraph recolor_bad_edges(const Hypergraph& G, const Hypergraph& Gstar,
                             const std::set<TotalColor>& bad,
                             const std::map<int, ColorId>& spare);

// Lowest-index color of G's table at each full-size ordinal that the pattern
// does not use; throws when the pattern exhausts some table.
std::map<int, ColorId> spare_colors(const UniformPattern& F, const Hypergraph& G);

struct RemovalConfig {
  std::vector<int> map_sizes;  // per level 1..k-1; empty = all-empty maps
  std::uint64_t seed = 1;
  std::int64_t family_budget = 200000;
  std::int64_t embed_budget = 10000000;
  std::uint64_t scan_budget = 10000000;
  KernelMode mode = KernelMode::Parallel;
};

struct RemovalOutcome {
  int case_id = 0;  // 1: recoloring kills all copies; 2: many copies
  Rational eps_bar;
  Hypergraph g_prime;
  std::map<std::string, Rational> change_fraction;  // per full-size index set
  std::int64_t changed_edges = 0;
  int bad_color_count = 0;
  int survivor_count = 0;            // realized non-bad copy classes
  Rational copy_lower_bound;         // sum of interval products over survivors
  Rational copy_probability;         // exact, in G
  Rational residual_copy_probability;  // exact, in G'
  Rational delta_bound;              // certificate bound of the error function
  bool a01_satisfied = false;        // delta_bound <= eps_bar / |C_I| per I
};

// The removal decision at practical scale: regularize with cfg.map_sizes,
// fit and verify an empirical error function, recolor bad total colors, then
// certify one of the two outcomes by exact counting.  Throws Undecided when
// the recoloring both exceeds the change budget and was needed.
RemovalOutcome removal_decision(const Hypergraph& G, const UniformPattern& F, const Rational& eps,
                                const RemovalConfig& cfg);

}  // namespace hreg

#endif
