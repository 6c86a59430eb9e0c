#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hreg/complex.hpp"
#include "hreg/errors.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/rng.hpp"

using namespace hreg;

namespace {

Hypergraph pair_graph(std::vector<ColorId> pair_coloring,
                      std::vector<std::string> pair_table = {"black", "white"}) {
  return Hypergraph::build(2, 2, {2, 2},
                           {{"u"}, {"u"}, std::move(pair_table)},
                           {{0, 0}, {0, 0}, std::move(pair_coloring)});
}

}  // namespace

TEST_CASE("index sets enumerate in (size, lex) order") {
  auto sets = canonical_subsets(IndexSet::full(3), 3);
  REQUIRE(sets.size() == 7);
  CHECK(sets[0].str() == "0");
  CHECK(sets[1].str() == "1");
  CHECK(sets[2].str() == "2");
  CHECK(sets[3].str() == "0,1");
  CHECK(sets[4].str() == "0,2");
  CHECK(sets[5].str() == "1,2");
  CHECK(sets[6].str() == "0,1,2");
  CHECK(canonical_proper_subsets(IndexSet::of({0, 1, 2})).size() == 6);
}

TEST_CASE("build accepts a constant coloring and wires tables") {
  Hypergraph G = pair_graph({0, 0, 0, 0}, {"black"});
  CHECK(G.r() == 2);
  CHECK(G.k() == 2);
  CHECK(G.edge_count(G.ordinal(IndexSet::of({0, 1}))) == 4);
  CHECK(G.table(G.ordinal(IndexSet::of({0, 1}))).size() == 1);
  auto census = total_color_census(G, G.ordinal(IndexSet::of({0, 1})));
  REQUIRE(census.size() == 1);
  CHECK(census.begin()->second == 4);
  CHECK(census.begin()->first.entries.size() == 3);  // 2^2 - 1
}

TEST_CASE("build rejects malformed specs with named locations") {
  // incomplete coloring: 3 entries for a 4-tuple edge set
  CHECK_THROWS_WITH_AS(
      Hypergraph::build(2, 2, {2, 2}, {{"u"}, {"u"}, {"b"}}, {{0, 0}, {0, 0}, {0, 0, 0}}),
      doctest::Contains("{0,1}"), ValidationError);
  // k exceeds r
  CHECK_THROWS_AS(Hypergraph::build(1, 2, {2}, {{"u"}}, {{0}}), ValidationError);
  // color id outside the table, diagnostic names the tuple
  CHECK_THROWS_WITH_AS(
      Hypergraph::build(2, 2, {2, 2}, {{"u"}, {"u"}, {"b"}}, {{0, 0}, {0, 0}, {0, 1, 0, 0}}),
      doctest::Contains("(0,1)"), ValidationError);
  // same-size index sets must share table size under build ...
  CHECK_THROWS_AS(Hypergraph::build(2, 1, {2, 2}, {{"a"}, {"a", "b"}}, {{0, 0}, {1, 0}}),
                  ValidationError);
  // ... but raw accepts ragged tables
  CHECK_NOTHROW(Hypergraph::raw(2, 1, {2, 2}, {{"a"}, {"a", "b"}}, {{0, 0}, {1, 0}}));
}

TEST_CASE("restrict_edge keeps exactly the requested parts") {
  Edge e{IndexSet::of({1, 3, 5}), {7, 8, 9}};
  Edge f = restrict_edge(e, IndexSet::of({1, 5}));
  CHECK(f.index.str() == "1,5");
  CHECK(f.verts == std::vector<int>{7, 9});
  Edge same = restrict_edge(e, e.index);
  CHECK(same.verts == e.verts);
  CHECK_THROWS_AS(restrict_edge(e, IndexSet::of({2})), ValidationError);
  CHECK_THROWS_AS(restrict_edge(e, IndexSet()), ValidationError);
}

TEST_CASE("total colors follow canonical subset order and restrict consistently") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  Edge e{IndexSet::of({0, 1}), {0, 1}};
  TotalColor c = total_color(G, e);
  REQUIRE(c.entries.size() == 3);
  CHECK(c.top() == 1);
  CHECK(c.frame() == std::vector<ColorId>{0, 0});

  Edge v = restrict_edge(e, IndexSet::of({1}));
  TotalColor cv = total_color(G, v);
  REQUIRE(cv.entries.size() == 1);
  TotalColor cr = restrict_total_color(c, IndexSet::of({1}));
  CHECK(cr.entries == cv.entries);
  CHECK(cr.index == cv.index);
}

TEST_CASE("edge enumeration is lexicographic, complete, and repeatable") {
  Hypergraph G = Hypergraph::build(2, 2, {2, 3},
                                   {{"u"}, {"u"}, {"b"}},
                                   {{0, 0}, {0, 0, 0}, std::vector<ColorId>(6, 0)});
  int ord = G.ordinal(IndexSet::of({0, 1}));
  std::vector<std::vector<int>> seen;
  for_each_edge(G, ord, [&](std::int64_t off, const std::vector<int>& t) {
    CHECK(off == static_cast<std::int64_t>(seen.size()));
    CHECK(G.offset_of(ord, t) == off);
    CHECK(G.tuple_of(ord, off) == t);
    seen.push_back(t);
  });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{0, 0});
  CHECK(seen[1] == std::vector<int>{0, 1});  // last part least significant
  CHECK(seen.back() == std::vector<int>{1, 2});
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  std::vector<std::vector<int>> again;
  for_each_edge(G, ord, [&](std::int64_t, const std::vector<int>& t) { again.push_back(t); });
  CHECK(again == seen);

  int vord = G.ordinal(IndexSet::of({1}));
  CHECK(G.edge_count(vord) == 3);
}

TEST_CASE("random hypergraphs are seed-deterministic with sane frequencies") {
  Rng a(42), b(42), c(43);
  Hypergraph G1 = random_hypergraph(2, 2, {8, 8}, {1, 2}, a);
  Hypergraph G2 = random_hypergraph(2, 2, {8, 8}, {1, 2}, b);
  Hypergraph G3 = random_hypergraph(2, 2, {8, 8}, {1, 2}, c);
  int ord = G1.ordinal(IndexSet::of({0, 1}));
  CHECK(G1.coloring(ord) == G2.coloring(ord));
  CHECK(G1.coloring(ord) != G3.coloring(ord));

  // b_2 = 1 forces the same output for any seed
  Rng d(1), e(2);
  CHECK(random_hypergraph(2, 2, {4, 4}, {1, 1}, d).coloring(ord) ==
        random_hypergraph(2, 2, {4, 4}, {1, 1}, e).coloring(ord));

  // 64x64 i.i.d. fair colors: count within 4 sigma of 2048
  Rng f(7);
  Hypergraph H = random_hypergraph(2, 2, {64, 64}, {1, 2}, f);
  std::int64_t ones = 0;
  for (ColorId col : H.coloring(ord)) ones += col;
  CHECK(std::abs(static_cast<double>(ones) - 2048.0) <= 4 * 32.0);
}

TEST_CASE("complex validation reports closure, binding, and range violations") {
  Hypergraph G = pair_graph({0, 1, 1, 0});

  SimplicialComplex all_invisible(2, 2, 1);
  CHECK(validate_complex(all_invisible, G).empty());
  CHECK(visible_edges(all_invisible).empty());

  // visible pair above an invisible vertex
  SimplicialComplex S(2, 2, 1);
  S.set_host_color(S.ordinal(IndexSet::of({0, 1})), 0, 0);
  auto v = validate_complex(S, G);
  REQUIRE(!v.empty());
  CHECK(v.front().kind == "closure");

  // two local colors bound to one host color
  SimplicialComplex T(2, 2, 2);
  int vord = T.ordinal(IndexSet::of({0}));
  T.set_local(vord, 0, 0);
  T.set_local(vord, 1, 1);
  T.set_binding(vord, {0, 0});
  bool binding_flagged = false;
  for (const auto& viol : validate_complex(T, G))
    if (viol.kind == "binding") binding_flagged = true;
  CHECK(binding_flagged);

  // host color out of table range
  SimplicialComplex U(2, 2, 1);
  U.set_host_color(U.ordinal(IndexSet::of({0})), 0, 5);
  bool range_flagged = false;
  for (const auto& viol : validate_complex(U, G))
    if (viol.kind == "range") range_flagged = true;
  CHECK(range_flagged);
}

TEST_CASE("induced complexes copy host colors and stay valid") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0}, {1}}, 2);
  CHECK(validate_complex(S, G).empty());
  int pord = S.ordinal(IndexSet::of({0, 1}));
  CHECK(S.visible(pord, 0));
  CHECK(S.host_color(pord, 0) == 1);  // G(x0, y1) = white
  CHECK(visible_edges(S).size() == 3);
  CHECK(visible_edges(S, 1).size() == 2);
}

TEST_CASE("partition utilities agree on refinement and relabeling") {
  CHECK(canonical_class_labels({5, 5, 9, 5}) == std::vector<int>{0, 0, 1, 0});
  CHECK(partition_refines({0, 1, 2, 3}, {0, 0, 1, 1}));
  CHECK(!partition_refines({0, 0, 1, 1}, {0, 1, 2, 3}));
  CHECK(partition_refines({0, 1, 0, 1}, {0, 1, 0, 1}));
}
