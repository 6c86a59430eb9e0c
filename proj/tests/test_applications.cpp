#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hreg/applications.hpp"

#include <algorithm>

#include "hreg/errors.hpp"
#include "hreg/rng.hpp"

using namespace hreg;

namespace {

GridSet evens(int N) {
  std::vector<std::vector<int>> pts;
  for (int v = 0; v < N; v += 2) pts.push_back({v});
  return GridSet::from_points(N, 1, pts);
}

}  // namespace

TEST_CASE("simplex and grid sets: point validation names the offending point") {
  CHECK_THROWS_AS(SimplexSet::from_points(3, 2, {{1, 1, 1}}), ValidationError);  // sum 3 != 2
  CHECK_THROWS_AS(SimplexSet::from_points(3, 2, {{2, 0}}), ValidationError);     // arity
  CHECK_THROWS_AS(SimplexSet::from_points(3, 2, {{3, 0, -1}}), ValidationError); // range
  CHECK_THROWS_AS(SimplexSet::from_points(0, 2, {}), ValidationError);

  SimplexSet S = SimplexSet::from_points(3, 2, {{0, 1, 1}, {2, 0, 0}});
  CHECK(S.contains({0, 1, 1}));
  CHECK_FALSE(S.contains({1, 1, 0}));

  CHECK_THROWS_AS(GridSet::from_points(2, 2, {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(GridSet::from_points(2, 2, {{0}}), ValidationError);
  GridSet T = GridSet::from_points(2, 2, {{0, 1}, {0, 1}});  // duplicates collapse
  CHECK(T.points.size() == 1);
}

TEST_CASE("corner hypergraph: red cells are exactly the projections of S") {
  SimplexSet S = SimplexSet::from_points(3, 2, {{0, 1, 1}, {2, 0, 0}, {1, 1, 0}});
  Hypergraph G = corner_hypergraph(S);
  CHECK(G.r() == 3);
  CHECK(G.k() == 2);
  CHECK(G.part_sizes() == std::vector<int>{3, 3, 3});

  for (const IndexSet I : canonical_subsets(IndexSet::full(3), 2)) {
    const int ord = G.ordinal(I);
    if (I.size() < 2) {
      CHECK(G.table_size(ord) == 1);
      continue;
    }
    std::set<std::vector<int>> proj;
    for (const auto& p : S.points) {
      std::vector<int> q;
      for (int m : I.members()) q.push_back(p[m]);
      proj.insert(q);
    }
    std::int64_t reds = 0;
    for_each_edge(G, ord, [&](std::int64_t off, const std::vector<int>& tuple) {
      const bool red = G.color_at(ord, off) == kRed;
      CHECK(red == (proj.count(tuple) != 0));
      if (red) ++reds;
    });
    CHECK(reds == static_cast<std::int64_t>(proj.size()));
  }
}

TEST_CASE("all-red pattern: one red cell for every full-size index set") {
  UniformPattern F = all_red_pattern(2);
  CHECK(F.r == 3);
  CHECK(F.k == 2);
  CHECK(F.h == 1);
  REQUIRE(F.top.size() == 3);
  for (const auto& cells : F.top) CHECK(cells == std::vector<ColorId>{kRed});
  Hypergraph G = corner_hypergraph(SimplexSet::from_points(2, 2, {{1, 0, 0}}));
  CHECK_NOTHROW(validate_pattern(F, G));
}

TEST_CASE("simplex corner: full k=1 diagonal yields the first anchor in scan order") {
  std::vector<std::vector<int>> pts;
  for (int x = 0; x < 3; ++x) pts.push_back({x, 2 - x});
  SimplexSet S = SimplexSet::from_points(3, 1, pts);
  auto sol = find_simplex_corner(S, {});
  REQUIRE(sol.has_value());
  CHECK(sol->a == std::vector<int>{0, 0});
  CHECK(sol->c == 2);
}

TEST_CASE("simplex corner: a singleton has none; c=0 never counts") {
  SimplexSet S = SimplexSet::from_points(3, 2, {{2, 0, 0}});
  CHECK_FALSE(find_simplex_corner(S, {}).has_value());
}

TEST_CASE("simplex corner: instance whose only corner has negative c") {
  SimplexSet S = SimplexSet::from_points(3, 2, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto sol = find_simplex_corner(S, {});
  REQUIRE(sol.has_value());
  CHECK(sol->a == std::vector<int>{1, 1, 1});
  CHECK(sol->c == -1);

  CornerConfig serial;
  serial.mode = KernelMode::Serial;
  auto again = find_simplex_corner(S, serial);
  REQUIRE(again.has_value());
  CHECK(again->a == sol->a);
  CHECK(again->c == sol->c);
}

TEST_CASE("simplex corner: refuses when the anchor space exceeds the budget") {
  SimplexSet S;
  S.N = 100;
  S.k = 2;
  CornerConfig cfg;
  cfg.budget = 999999;  // space is 10^6
  CHECK_THROWS_AS(find_simplex_corner(S, cfg), BudgetExceeded);
}

TEST_CASE("symmetrization: even numbers center at the first maximizer") {
  Symmetrization sym = symmetrize_set(evens(7), 13, 1);
  CHECK(sym.exhaustive);
  CHECK(sym.two_x == std::vector<int>{6});
  CHECK(sym.T.points == std::set<std::vector<int>>{{0}, {2}, {4}, {6}});
  CHECK(sym.target == Rational(28, 25));  // (49/50) * 16 / (2 * 7)
  CHECK(sym.meets_target);
}

TEST_CASE("symmetrization: sampled centers are seed-deterministic and never beat exhaustive") {
  Symmetrization a = symmetrize_set(evens(7), 3, 99);
  Symmetrization b = symmetrize_set(evens(7), 3, 99);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.two_x == b.two_x);
  CHECK(a.T.points == b.T.points);
  CHECK(a.T.points.size() <= 4);
  CHECK_THROWS_AS(symmetrize_set(evens(7), 0, 1), ValidationError);
}

TEST_CASE("symmetrization: two-dimensional diagonal pair reflects onto itself") {
  GridSet S = GridSet::from_points(2, 2, {{0, 0}, {1, 1}});
  Symmetrization sym = symmetrize_set(S, 9, 1);
  CHECK(sym.exhaustive);
  CHECK(sym.two_x == std::vector<int>{1, 1});
  CHECK(sym.T.points == S.points);
  CHECK(sym.target == Rational(49, 200));
  CHECK(sym.meets_target);
}

TEST_CASE("pattern reduction: translates by the least point and sorts the directions") {
  PatternReduction red = pattern_reduction({{1, 2}, {3, 1}, {1, 1}});
  CHECK(red.f0 == std::vector<int>{1, 1});
  CHECK(red.r_prime == 2);
  REQUIRE(red.columns.size() == 2);
  CHECK(red.columns[0] == std::vector<int>{0, 1});
  CHECK(red.columns[1] == std::vector<int>{2, 0});

  PatternReduction moved = pattern_reduction({{6, 7}, {8, 6}, {6, 6}});
  CHECK(moved.columns == red.columns);  // translation invariant

  CHECK_THROWS_AS(pattern_reduction({{0, 0}}), ValidationError);
  CHECK_THROWS_AS(pattern_reduction({{0, 0}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(pattern_reduction({{0, 0}, {1}}), ValidationError);
}

TEST_CASE("configuration search: pinned three-term progression misses in {0,1,3}") {
  GridSet S = GridSet::from_points(4, 1, {{0}, {1}, {3}});
  std::vector<std::vector<int>> F = {{0}, {1}, {2}};
  CHECK_FALSE(find_configuration(S, F, {}).has_value());
  CHECK(brute_force_oracle(S, F, 1000000).empty());
}

TEST_CASE("configuration search: the odd numbers carry a verified progression") {
  GridSet S = GridSet::from_points(10, 1, {{1}, {3}, {5}, {7}, {9}});
  auto hit = find_ap(S, 3, {});
  REQUIRE(hit.has_value());
  CHECK(hit->c >= 1);
  REQUIRE(hit->witnesses.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(hit->witnesses[j][0] == hit->a[0] + hit->c * j);
    CHECK(S.contains(hit->witnesses[j]));
  }
  CHECK((hit->engine == "lift" || hit->engine == "scan"));
}

TEST_CASE("configuration search: singleton pattern anchors on the least member") {
  GridSet S = GridSet::from_points(5, 2, {{2, 3}, {4, 4}});
  auto hit = find_configuration(S, {{1, 1}}, {});
  REQUIRE(hit.has_value());
  CHECK(hit->a == std::vector<int>{1, 2});
  CHECK(hit->c == 1);
  CHECK(hit->engine == "scan");
  CHECK(hit->witnesses == std::vector<std::vector<int>>{{2, 3}});

  GridSet empty;
  empty.N = 5;
  empty.r = 2;
  CHECK_FALSE(find_configuration(empty, {{1, 1}}, {}).has_value());
}

TEST_CASE("configuration search: input validation") {
  GridSet S = GridSet::from_points(4, 1, {{0}});
  CHECK_THROWS_AS(find_configuration(S, {}, {}), ValidationError);
  CHECK_THROWS_AS(find_configuration(S, {{0}, {0}}, {}), ValidationError);
  CHECK_THROWS_AS(find_configuration(S, {{0, 1}}, {}), ValidationError);
  GridSet P = GridSet::from_points(4, 2, {{0, 0}});
  CHECK_THROWS_AS(find_ap(P, 3, {}), ValidationError);
  CHECK_THROWS_AS(find_ap(S, 0, {}), ValidationError);
}

TEST_CASE("brute-force oracle: hand case, ordering, and budget refusal") {
  GridSet S = GridSet::from_points(5, 1, {{0}, {2}, {4}});
  std::vector<std::vector<int>> F = {{0}, {2}};
  auto all = brute_force_oracle(S, F, 1000000);
  std::vector<std::pair<std::vector<int>, long long>> want = {
      {{0}, 1}, {{0}, 2}, {{2}, 1}};
  CHECK(all == want);
  CHECK(std::is_sorted(all.begin(), all.end()));

  GridSet W = GridSet::from_points(12, 2, {{0, 0}});
  CHECK_THROWS_AS(brute_force_oracle(W, {{0, 0}, {1, 1}}, 10), BudgetExceeded);
}

TEST_CASE("configuration search: budget refusal propagates when both engines overflow") {
  GridSet S = GridSet::from_points(50, 2, {{0, 0}, {1, 1}, {2, 2}});
  FindConfig cfg;
  cfg.budget = 100;
  CHECK_THROWS_AS(find_configuration(S, {{0, 0}, {1, 0}, {0, 1}}, cfg), BudgetExceeded);
}

TEST_CASE("configuration search: existence always agrees with the oracle") {
  Rng rng(20260814);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Rng r = rng.child(trial);
    const int dim = 1 + r.uniform_int(2);
    const int N = 4 + r.uniform_int(9);

    std::vector<std::vector<int>> pts;
    std::vector<int> p(dim, 0);
    std::int64_t cells = 1;
    for (int i = 0; i < dim; ++i) cells *= N;
    for (std::int64_t off = 0; off < cells; ++off) {
      if (r.uniform_int(5) < 2) pts.push_back(p);
      for (int pos = dim - 1; pos >= 0; --pos) {
        if (++p[pos] < N) break;
        p[pos] = 0;
      }
    }
    GridSet S = GridSet::from_points(N, dim, pts);

    std::set<std::vector<int>> fset;
    const std::size_t want = 2 + r.uniform_int(2);
    for (int tries = 0; tries < 100 && fset.size() < want; ++tries) {
      std::vector<int> f(dim);
      for (int i = 0; i < dim; ++i) f[i] = r.uniform_int(3);
      fset.insert(f);
    }
    REQUIRE(fset.size() >= 2);
    std::vector<std::vector<int>> F(fset.begin(), fset.end());

    FindConfig cfg;
    cfg.seed = 5 + trial;
    auto hit = find_configuration(S, F, cfg);
    auto all = brute_force_oracle(S, F, 100000000);
    REQUIRE(hit.has_value() == !all.empty());
    if (hit) {
      ++found;
      REQUIRE(hit->c >= 1);
      REQUIRE(hit->c <= N);
      REQUIRE(hit->witnesses.size() == F.size());
      for (std::size_t j = 0; j < F.size(); ++j) {
        for (int i = 0; i < dim; ++i)
          REQUIRE(hit->witnesses[j][i] == hit->a[i] + hit->c * F[j][i]);
        REQUIRE(S.contains(hit->witnesses[j]));
      }
    }
  }
  CHECK(found > 10);  // the densities above make hits common
}

TEST_CASE("configuration search: dense interval always has a progression") {
  std::vector<std::vector<int>> pts;
  for (int v = 0; v < 30; ++v)
    if (v != 7) pts.push_back({v});
  GridSet S = GridSet::from_points(30, 1, pts);
  auto hit = find_ap(S, 4, {});
  REQUIRE(hit.has_value());
  for (const auto& w : hit->witnesses) CHECK(S.contains(w));
}
