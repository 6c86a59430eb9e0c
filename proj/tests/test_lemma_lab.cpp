#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hreg/lemma_lab.hpp"

#include "hreg/errors.hpp"
#include "hreg/rng.hpp"

using namespace hreg;

namespace {

Hypergraph pair_graph(std::vector<ColorId> pair_coloring,
                      std::vector<std::string> vertex_table = {"u"},
                      std::vector<std::vector<ColorId>> vertex_colors = {{0, 0}, {0, 0}}) {
  return Hypergraph::build(2, 2, {2, 2},
                           {vertex_table, vertex_table, {"black", "white"}},
                           {vertex_colors[0], vertex_colors[1], std::move(pair_coloring)});
}

ErrorFunction constant_delta(const NonnegReal& v) {
  ErrorFunction d;
  d.set_default(v);
  return d;
}

NestedEquivalence four_point(std::vector<Rational> x) {
  NestedEquivalence inst;
  inst.fine = {0, 0, 1, 1};
  inst.coarse = {7, 7, 7, 7};
  inst.x = std::move(x);
  return inst;
}

}  // namespace

TEST_CASE("nested Cauchy-Schwarz: alternating values balance both relations") {
  CsMargin m = check_nested_cauchy_schwarz(four_point({0, 1, 0, 1}));
  CHECK(m.lhs == Rational(1, 4));
  CHECK(m.rhs == Rational(1, 4));
  CHECK(m.margin == 0);
}

TEST_CASE("nested Cauchy-Schwarz: block values open a strict gap") {
  CsMargin m = check_nested_cauchy_schwarz(four_point({0, 0, 1, 1}));
  CHECK(m.lhs == Rational(1, 2));
  CHECK(m.rhs == Rational(1, 4));
  CHECK(m.margin == Rational(1, 4));
}

TEST_CASE("nested Cauchy-Schwarz: equal relations and constant variables give zero margin") {
  NestedEquivalence inst;
  inst.fine = {0, 1, 0, 2};
  inst.coarse = {3, 4, 3, 5};  // same partition up to relabeling
  inst.x = {Rational(1, 3), Rational(-2, 5), Rational(7), Rational(0)};
  CHECK(check_nested_cauchy_schwarz(inst).margin == 0);

  NestedEquivalence constant = four_point({Rational(2, 7), Rational(2, 7), Rational(2, 7), Rational(2, 7)});
  CsMargin m = check_nested_cauchy_schwarz(constant);
  CHECK(m.lhs == Rational(4, 49));
  CHECK(m.margin == 0);
}

TEST_CASE("nested Cauchy-Schwarz: margin is invariant under negating the variable") {
  NestedEquivalence inst;
  inst.fine = {0, 0, 1, 1, 2, 2};
  inst.coarse = {0, 0, 0, 0, 2, 2};
  inst.x = {Rational(1, 2), Rational(-1, 3), Rational(2), Rational(0), Rational(5, 4), Rational(-7, 8)};
  CsMargin plus = check_nested_cauchy_schwarz(inst);
  for (Rational& v : inst.x) v = -v;
  CsMargin minus = check_nested_cauchy_schwarz(inst);
  CHECK(plus.margin == minus.margin);
  CHECK(plus.lhs == minus.lhs);
}

TEST_CASE("nested Cauchy-Schwarz: rejects non-refining or mismatched inputs") {
  NestedEquivalence inst;
  inst.fine = {0, 0, 0, 0};  // coarser than coarse
  inst.coarse = {0, 0, 1, 1};
  inst.x = {0, 1, 0, 1};
  CHECK_THROWS_AS(check_nested_cauchy_schwarz(inst), ValidationError);

  NestedEquivalence empty;
  CHECK_THROWS_AS(check_nested_cauchy_schwarz(empty), ValidationError);

  NestedEquivalence ragged = four_point({0, 1, 0, 1});
  ragged.fine.pop_back();
  CHECK_THROWS_AS(check_nested_cauchy_schwarz(ragged), ValidationError);
}

TEST_CASE("nested Cauchy-Schwarz: random refinements never lose second moment") {
  Rng rng(20260814);
  for (int trial = 0; trial < 300; ++trial) {
    Rng r = rng.child(trial);
    const int n = 1 + r.uniform_int(12);
    NestedEquivalence inst;
    inst.fine.resize(n);
    inst.coarse.resize(n);
    inst.x.resize(n);
    for (int i = 0; i < n; ++i) {
      inst.coarse[i] = r.uniform_int(3);
      inst.fine[i] = inst.coarse[i] * 4 + r.uniform_int(2);
      inst.x[i] = Rational(r.uniform_int(17) - 8, 1 + r.uniform_int(8));
    }
    CsMargin m = check_nested_cauchy_schwarz(inst);
    REQUIRE(m.margin >= 0);
    REQUIRE(m.lhs == m.rhs + m.margin);
  }
}

TEST_CASE("counting error bound: single fully visible top is reproduced exactly") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0}, {0}}, 2);  // top demands black
  CountingCheck c = check_counting_error_bound(G, S);
  CHECK(c.applicable);
  CHECK(c.top_count == 1);
  CHECK(c.lhs == 0);  // conditional top probability equals the relative density
  CHECK(c.rhs == 0);
  CHECK(c.holds);
}

TEST_CASE("counting error bound: diagonal 2x2 pattern with h=2 gives lhs 1/16, rhs 1/4") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0, 1}, {0, 1}}, 2);
  CountingCheck c = check_counting_error_bound(G, S);
  CHECK(c.applicable);
  CHECK(c.top_count == 4);
  CHECK(c.lhs == Rational(1, 16));
  CHECK(c.rhs == Rational(1, 4));
  CHECK(c.holds);
}

TEST_CASE("counting error bound: no visible tops degenerates to 0 <= 0") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0}, {1}}, 1);  // vertex level only
  CountingCheck c = check_counting_error_bound(G, S);
  CHECK(c.applicable);
  CHECK(c.top_count == 0);
  CHECK(c.lhs == 0);
  CHECK(c.rhs == 0);
  CHECK(c.holds);
}

TEST_CASE("counting error bound: unrealized frame event is flagged inapplicable") {
  Hypergraph G = pair_graph({0, 1, 1, 0}, {"a", "b"});  // every vertex keeps color 0
  SimplicialComplex S(2, 2, 1);
  S.set_host_color(S.ordinal(IndexSet::of({0})), 0, 1);  // demands the unused vertex color
  S.set_host_color(S.ordinal(IndexSet::of({1})), 0, 0);
  S.set_host_color(S.ordinal(IndexSet::of({0, 1})), 0, 0);
  CHECK(validate_complex(S, G).empty());
  CountingCheck c = check_counting_error_bound(G, S);
  CHECK_FALSE(c.applicable);
  CHECK_FALSE(c.holds);
  CHECK(c.top_count == 1);
}

TEST_CASE("counting error bound: refuses when the assignment space exceeds the budget") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0, 1}, {0, 1}}, 2);
  CHECK_THROWS_AS(check_counting_error_bound(G, S, 15), BudgetExceeded);  // space is 16
}

TEST_CASE("counting error bound: holds on random two-part hosts and induced patterns") {
  Rng rng(41);
  for (int trial = 0; trial < 24; ++trial) {
    Rng r = rng.child(trial);
    const int n = 2 + r.uniform_int(2);
    const int b2 = 2 + r.uniform_int(2);
    Rng gr = r.child(1000);
    Hypergraph G = random_hypergraph(2, 2, {n, n}, {1, b2}, gr);
    const int h = 1 + r.uniform_int(2);
    std::vector<std::vector<int>> assign(2);
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < h; ++t) assign[i].push_back(r.uniform_int(n));
    SimplicialComplex S = induced_complex(G, assign, 2);
    CountingCheck c = check_counting_error_bound(G, S);
    REQUIRE(c.applicable);  // the inducing assignment itself realizes the frame
    REQUIRE(c.holds);
    REQUIRE(c.lhs >= 0);
    REQUIRE(c.rhs >= 0);
  }
}

TEST_CASE("mean-square bound: monochrome host at constant functional matches closed forms") {
  Hypergraph G = pair_graph({0, 0, 0, 0});
  SimplicialComplex S = induced_complex(G, {{0}, {0}}, 2);
  TestFunctional F;
  F.f = {{Rational(1, 2), Rational(0)}};
  MeanSquareCheck c = check_mean_square_bound(G, S, F, 1, constant_delta(NonnegReal::from_rational(0)));
  CHECK(c.delta_verified);
  CHECK(c.lhs_d == Rational(1, 4));
  CHECK(c.rhs_d == Rational(1, 2));  // t1 * 1 * (1 + 1/m) with one frame class
  CHECK(c.d_holds);
  CHECK(c.guard);
  CHECK(c.c_applicable);
  CHECK(c.lhs_c == Rational(1, 4));
  CHECK(c.rhs_c == Rational(81, 2));  // 2 * 3^(2 lowers) * inner moment
  CHECK(c.c_holds);
}

TEST_CASE("mean-square bound: zero functional collapses the left sides") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{1}, {1}}, 2);
  TestFunctional F;
  F.f = {{Rational(0), Rational(0)}};
  MeanSquareCheck c = check_mean_square_bound(G, S, F, 2, constant_delta(NonnegReal::from_rational(0)));
  CHECK(c.delta_verified);
  CHECK(c.lhs_d == 0);
  CHECK(c.d_holds);
  CHECK(c.c_applicable);
  CHECK(c.lhs_c == 0);
}

TEST_CASE("mean-square bound: a wide error function disables the smallness guard") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0}, {0}}, 2);
  TestFunctional F;
  F.f = {{Rational(1), Rational(-1)}};
  MeanSquareCheck c = check_mean_square_bound(G, S, F, 1, constant_delta(NonnegReal::from_rational(1)));
  CHECK(c.delta_verified);  // interval [0,1] certifies everything
  CHECK(c.d_holds);
  CHECK_FALSE(c.guard);  // densities are not above twice the error
  CHECK_FALSE(c.c_holds);
  CHECK(c.c_applicable);
}

TEST_CASE("mean-square bound: refuses an error function without an exact certificate") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0}, {0}}, 2);
  TestFunctional F;
  F.f = {{Rational(1), Rational(0)}};
  ErrorFunction irr = constant_delta(NonnegReal::sqrt_of(Rational(1, 2)));
  CHECK_THROWS_WITH_AS(check_mean_square_bound(G, S, F, 1, irr),
                       "delta does not verify exactly as a (k-1,2h)-error function",
                       ValidationError);
}

TEST_CASE("mean-square bound: rejects malformed functionals and parameters") {
  Hypergraph G = pair_graph({0, 1, 1, 0});
  SimplicialComplex S = induced_complex(G, {{0}, {0}}, 2);
  TestFunctional F;
  F.f = {{Rational(1), Rational(0)}};
  ErrorFunction zero = constant_delta(NonnegReal::from_rational(0));
  CHECK_THROWS_AS(check_mean_square_bound(G, S, F, 0, zero), ValidationError);
  CHECK_THROWS_AS(check_mean_square_bound(G, S, F, 1, zero, 5), ValidationError);

  TestFunctional wide;
  wide.f = {{Rational(2), Rational(0)}};
  CHECK_THROWS_AS(check_mean_square_bound(G, S, wide, 1, zero), ValidationError);

  TestFunctional ragged;
  ragged.f = {{Rational(1)}};
  CHECK_THROWS_AS(check_mean_square_bound(G, S, ragged, 1, zero), ValidationError);

  SimplicialComplex V = induced_complex(G, {{0}, {0}}, 1);  // no visible top
  CHECK_THROWS_AS(check_mean_square_bound(G, V, F, 1, zero), ValidationError);
}

TEST_CASE("mean-square bound: holds with guard on random two-part instances") {
  Rng rng(58);
  for (int trial = 0; trial < 16; ++trial) {
    Rng r = rng.child(trial);
    const int n = 2 + r.uniform_int(2);
    const int b2 = 2 + r.uniform_int(2);
    Rng gr = r.child(1000);
    Hypergraph G = random_hypergraph(2, 2, {n, n}, {1, b2}, gr);
    std::vector<std::vector<int>> assign = {{r.uniform_int(n)}, {r.uniform_int(n)}};
    SimplicialComplex S = induced_complex(G, assign, 2);
    TestFunctional F;
    F.f.emplace_back();
    for (int c = 0; c < b2; ++c)
      F.f[0].push_back(Rational(r.uniform_int(9) - 4, 4));
    MeanSquareCheck c = check_mean_square_bound(G, S, F, 1, constant_delta(NonnegReal::from_rational(0)));
    REQUIRE(c.delta_verified);
    REQUIRE(c.d_holds);
    REQUIRE(c.guard);  // h=1 leaves no outside lower edges and zero error
    REQUIRE(c.c_applicable);
    REQUIRE(c.c_holds);
  }
}
