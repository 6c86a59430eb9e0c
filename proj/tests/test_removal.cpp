#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hreg/removal.hpp"

#include "hreg/errors.hpp"
#include "hreg/rng.hpp"

using namespace hreg;

namespace {

// x-by-x host, single vertex color, pair table `names`, coloring by fn(x,y).
template <typename Fn>
Hypergraph grid_graph(int n, std::vector<std::string> names, Fn&& color) {
  std::vector<ColorId> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) pairs.push_back(color(x, y));
  return Hypergraph::build(2, 2, {n, n},
                           {{"u"}, {"u"}, std::move(names)},
                           {std::vector<ColorId>(n, 0), std::vector<ColorId>(n, 0), pairs});
}

Hypergraph diagonal_graph(int n, std::vector<std::string> names = {"black", "white"}) {
  return grid_graph(n, std::move(names), [](int x, int y) { return x == y ? 0 : 1; });
}

UniformPattern top_pattern(int h, std::vector<ColorId> cells) {
  UniformPattern F = UniformPattern::blank(2, 2, h);
  F.top[0] = std::move(cells);
  return F;
}

TotalColor pair_total(ColorId v0, ColorId v1, ColorId top) {
  TotalColor c;
  c.index = IndexSet::of({0, 1});
  c.entries = {v0, v1, top};
  return c;
}

}  // namespace

TEST_CASE("uniform pattern: blank shape, canonical top sets, parameter validation") {
  UniformPattern F = UniformPattern::blank(2, 2, 2);
  CHECK(F.cell_count() == 4);
  REQUIRE(F.top.size() == 1);
  CHECK(F.top[0] == std::vector<ColorId>(4, -1));

  UniformPattern T = UniformPattern::blank(3, 2, 1);
  std::vector<IndexSet> sets = T.top_sets();
  REQUIRE(sets.size() == 3);
  CHECK(sets[0].str() == "0,1");
  CHECK(sets[1].str() == "0,2");
  CHECK(sets[2].str() == "1,2");

  CHECK_THROWS_AS(UniformPattern::blank(1, 2, 1), ValidationError);
  CHECK_THROWS_AS(UniformPattern::blank(2, 0, 1), ValidationError);
  CHECK_THROWS_AS(UniformPattern::blank(2, 2, 0), ValidationError);
}

TEST_CASE("uniform pattern: validation against a host catches every mismatch") {
  Hypergraph G = diagonal_graph(2);
  UniformPattern F = top_pattern(1, {0});
  CHECK_NOTHROW(validate_pattern(F, G));

  UniformPattern wrong_r = UniformPattern::blank(3, 2, 1);
  CHECK_THROWS_AS(validate_pattern(wrong_r, G), ValidationError);

  UniformPattern ragged = top_pattern(1, {0, 0});
  CHECK_THROWS_AS(validate_pattern(ragged, G), ValidationError);

  UniformPattern missing = top_pattern(1, {0});
  missing.top.clear();
  CHECK_THROWS_AS(validate_pattern(missing, G), ValidationError);

  UniformPattern loud = top_pattern(1, {2});  // host table has two colors
  CHECK_THROWS_AS(validate_pattern(loud, G), ValidationError);

  UniformPattern quiet = top_pattern(1, {-1});  // fully unconstrained is fine
  CHECK_NOTHROW(validate_pattern(quiet, G));
}

TEST_CASE("pattern constraints: one constraint per visible cell with grid slot ids") {
  Hypergraph G = diagonal_graph(2);
  UniformPattern F = UniformPattern::blank(2, 2, 2);
  F.top[0][1] = 1;  // tuple (0,1)
  F.top[0][2] = 0;  // tuple (1,0)
  std::vector<EmbedConstraint> cs = pattern_constraints(F, G);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].ord == G.ordinal(IndexSet::of({0, 1})));
  CHECK(cs[0].slots == std::vector<int>{0, 3});  // part 0 tuple slot 0, part 1 tuple slot 1
  CHECK(cs[0].expected == 1);
  CHECK(cs[1].slots == std::vector<int>{1, 2});
  CHECK(cs[1].expected == 0);
  CHECK(pattern_constraints(UniformPattern::blank(2, 2, 2), G).empty());
}

TEST_CASE("spare colors: lowest unused color per top set; exhausted table refuses") {
  Hypergraph G3 = diagonal_graph(2, {"black", "white", "gray"});
  const int ord = G3.ordinal(IndexSet::of({0, 1}));
  CHECK(spare_colors(top_pattern(1, {1}), G3).at(ord) == 0);
  CHECK(spare_colors(top_pattern(1, {0}), G3).at(ord) == 1);
  CHECK(spare_colors(top_pattern(2, {0, 1, -1, -1}), G3).at(ord) == 2);

  Hypergraph G2 = diagonal_graph(2);
  CHECK(spare_colors(top_pattern(1, {0}), G2).at(G2.ordinal(IndexSet::of({0, 1}))) == 1);
  CHECK_THROWS_AS(spare_colors(top_pattern(2, {0, 1, -1, -1}), G2), ValidationError);
}

TEST_CASE("recolor bad edges: keys come from the regularized graph, writes hit the original") {
  Hypergraph G = diagonal_graph(2);
  Hypergraph Gstar = grid_graph(2, {"black", "white"}, [](int, int) { return 0; });
  std::map<int, ColorId> spare = {{G.ordinal(IndexSet::of({0, 1})), 1}};

  std::set<TotalColor> bad = {pair_total(0, 0, 0)};
  Hypergraph out = recolor_bad_edges(G, Gstar, bad, spare);
  const int ord = G.ordinal(IndexSet::of({0, 1}));
  for (std::int64_t off = 0; off < 4; ++off) CHECK(out.color_at(ord, off) == 1);
  for (int part = 0; part < 2; ++part) {
    const int vord = G.ordinal(IndexSet::of({part}));
    for (std::int64_t off = 0; off < 2; ++off)
      CHECK(out.color_at(vord, off) == G.color_at(vord, off));
  }

  Hypergraph same = recolor_bad_edges(G, Gstar, {pair_total(0, 0, 1)}, spare);
  for (std::int64_t off = 0; off < 4; ++off) CHECK(same.color_at(ord, off) == G.color_at(ord, off));

  CHECK_THROWS_AS(recolor_bad_edges(G, diagonal_graph(3), bad, spare), ValidationError);
  CHECK_THROWS_AS(recolor_bad_edges(G, Gstar, bad, {}), ValidationError);
}

TEST_CASE("removal: host without copies and without bad colors settles case 1 untouched") {
  Hypergraph G = grid_graph(4, {"black", "white"}, [](int, int) { return 1; });
  UniformPattern F = top_pattern(1, {0});
  RemovalOutcome out = removal_decision(G, F, Rational(1, 2), RemovalConfig{});
  CHECK(out.case_id == 1);
  CHECK(out.eps_bar == Rational(1, 576));
  CHECK(out.bad_color_count == 0);
  CHECK(out.changed_edges == 0);
  CHECK(out.change_fraction.at("0,1") == 0);
  CHECK(out.copy_probability == 0);
  CHECK(out.residual_copy_probability == 0);
  CHECK(out.survivor_count == 0);
  CHECK(out.copy_lower_bound == 0);
  CHECK(out.delta_bound == 0);
  CHECK(out.a01_satisfied);
  const int ord = G.ordinal(IndexSet::of({0, 1}));
  for (std::int64_t off = 0; off < 16; ++off)
    CHECK(out.g_prime.color_at(ord, off) == G.color_at(ord, off));
}

TEST_CASE("removal: single realized copy is certified as case 2 with matching lower bound") {
  Hypergraph G = grid_graph(2, {"black", "white"},
                            [](int x, int y) { return x == 0 && y == 0 ? 0 : 1; });
  UniformPattern F = top_pattern(1, {0});
  RemovalOutcome out = removal_decision(G, F, Rational(1, 2), RemovalConfig{});
  CHECK(out.case_id == 2);
  CHECK(out.bad_color_count == 0);
  CHECK(out.changed_edges == 0);
  CHECK(out.copy_probability == Rational(1, 4));
  CHECK(out.residual_copy_probability == Rational(1, 4));
  CHECK(out.survivor_count == 1);
  CHECK(out.copy_lower_bound == Rational(1, 4));
  CHECK(out.a01_satisfied);
}

TEST_CASE("removal: correlated diagonal forces a recoloring that kills every planted copy") {
  // h=2 all-black pattern on the diagonal host: copies collapse to x0=x1=y0=y1.
  Hypergraph G = diagonal_graph(4, {"black", "white", "gray"});
  UniformPattern F = top_pattern(2, {0, 0, 0, 0});
  RemovalOutcome out = removal_decision(G, F, Rational(1, 2), RemovalConfig{});
  CHECK(out.case_id == 1);
  CHECK(out.copy_probability == Rational(1, 64));
  CHECK(out.residual_copy_probability == 0);
  CHECK(out.changed_edges == 4);  // the black diagonal moves to the spare color
  CHECK(out.change_fraction.at("0,1") == Rational(1, 4));
  CHECK(out.bad_color_count >= 1);
  CHECK_FALSE(out.a01_satisfied);
  const int ord = G.ordinal(IndexSet::of({0, 1}));
  const ColorId spare = spare_colors(F, G).at(ord);
  CHECK(spare == 1);
  for (int x = 0; x < 4; ++x) CHECK(out.g_prime.color_at(ord, x * 4 + x) == spare);
}

TEST_CASE("removal: zero copies with an over-budget recoloring refuses as undecided") {
  // Three black cells and one white cell cannot embed into the diagonal host,
  // yet its correlation makes the black class bad, so tiny eps blocks case 1.
  Hypergraph G = diagonal_graph(4, {"black", "white", "gray"});
  UniformPattern F = top_pattern(2, {0, 0, 0, 1});
  CHECK_THROWS_AS(removal_decision(G, F, Rational(1, 100), RemovalConfig{}), Undecided);
}

TEST_CASE("removal: rejects degenerate eps") {
  Hypergraph G = diagonal_graph(2);
  UniformPattern F = top_pattern(1, {0});
  CHECK_THROWS_AS(removal_decision(G, F, Rational(0), RemovalConfig{}), ValidationError);
  CHECK_THROWS_AS(removal_decision(G, F, Rational(1), RemovalConfig{}), ValidationError);
  CHECK_THROWS_AS(removal_decision(G, F, Rational(3, 2), RemovalConfig{}), ValidationError);
}

TEST_CASE("removal: outcome invariants and determinism on a random host") {
  Rng rng(7);
  Hypergraph G = random_hypergraph(2, 2, {6, 6}, {1, 2}, rng);
  UniformPattern F = top_pattern(1, {0});
  RemovalConfig cfg;
  cfg.map_sizes = {1};
  cfg.seed = 11;
  RemovalOutcome a = removal_decision(G, F, Rational(1, 2), cfg);
  REQUIRE((a.case_id == 1 || a.case_id == 2));
  CHECK(a.eps_bar == Rational(1, 576));
  CHECK(a.copy_lower_bound >= 0);
  CHECK(a.copy_lower_bound <= a.copy_probability);
  CHECK(a.residual_copy_probability <= a.copy_probability);
  CHECK((a.survivor_count > 0) == (a.residual_copy_probability > 0));
  CHECK(a.change_fraction.at("0,1") == Rational(a.changed_edges, 36));
  CHECK(a.a01_satisfied == (a.delta_bound <= a.eps_bar));
  if (a.case_id == 1) CHECK(a.residual_copy_probability == 0);

  RemovalOutcome b = removal_decision(G, F, Rational(1, 2), cfg);
  CHECK(a.case_id == b.case_id);
  CHECK(a.changed_edges == b.changed_edges);
  CHECK(a.copy_lower_bound == b.copy_lower_bound);
  const int ord = G.ordinal(IndexSet::of({0, 1}));
  for (std::int64_t off = 0; off < 36; ++off)
    CHECK(a.g_prime.color_at(ord, off) == b.g_prime.color_at(ord, off));
}
