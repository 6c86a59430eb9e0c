#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hreg/io.hpp"

#include <filesystem>

#include "hreg/errors.hpp"
#include "hreg/rng.hpp"

using namespace hreg;

namespace {

std::string scratch(const std::string& name) {
  std::filesystem::create_directories("io_scratch");
  return "io_scratch/" + name;
}

Hypergraph sample_graph() {
  Rng rng(3);
  return random_hypergraph(2, 2, {3, 3}, {1, 2}, rng);
}

}  // namespace

TEST_CASE("hypergraph json: save, load, save again is byte-identical") {
  Hypergraph G = sample_graph();
  const std::string p1 = scratch("g1.json"), p2 = scratch("g2.json");
  save_hypergraph(G, p1);
  Hypergraph H = load_hypergraph(p1);
  save_hypergraph(H, p2);
  CHECK(read_text(p1) == read_text(p2));

  for (std::size_t ord = 0; ord < G.index_sets().size(); ++ord) {
    CHECK(H.table(static_cast<int>(ord)) == G.table(static_cast<int>(ord)));
    CHECK(H.coloring(static_cast<int>(ord)) == G.coloring(static_cast<int>(ord)));
  }
}

TEST_CASE("hypergraph json: ragged tables from regularization survive the trip") {
  Hypergraph G = Hypergraph::raw(2, 2, {2, 2},
                                 {{"a", "b"}, {"u"}, {"black", "white"}},
                                 {{0, 1}, {0, 0}, {0, 1, 1, 0}});
  Hypergraph H = hypergraph_from_json(hypergraph_json(G));
  CHECK(H.table(0) == std::vector<std::string>{"a", "b"});
  CHECK(H.table(1) == std::vector<std::string>{"u"});
  CHECK(H.coloring(2) == std::vector<ColorId>{0, 1, 1, 0});
}

TEST_CASE("hypergraph json: diagnostics name the field, index set, and tuple") {
  Json j = hypergraph_json(sample_graph());

  Json no_r = j;
  no_r.erase("r");
  CHECK_THROWS_WITH_AS(hypergraph_from_json(no_r), "missing field \"r\"", ValidationError);

  Json bad_r = j;
  bad_r["r"] = "two";
  CHECK_THROWS_WITH_AS(hypergraph_from_json(bad_r), "field \"r\" must be an integer",
                       ValidationError);

  Json big_k = j;
  big_k["k"] = 3;
  CHECK_THROWS_WITH(hypergraph_from_json(big_k), doctest::Contains("k must be in [1,r]"));

  Json missing = j;
  missing["coloring"].erase("0,1");
  CHECK_THROWS_WITH(hypergraph_from_json(missing),
                    doctest::Contains("coloring for index set {0,1} missing"));

  Json short_cells = j;
  short_cells["coloring"]["0,1"].erase(8);
  CHECK_THROWS_WITH(hypergraph_from_json(short_cells), doctest::Contains("has 8 entries, want 9"));
  CHECK_THROWS_WITH(hypergraph_from_json(short_cells), doctest::Contains("(2,2)"));
}

TEST_CASE("hypergraph load: errors carry the file path") {
  const std::string path = scratch("broken.json");
  write_text(path, "{\"r\": 1}");
  CHECK_THROWS_WITH(load_hypergraph(path), doctest::Contains(path.c_str()));
  CHECK_THROWS_WITH(load_hypergraph(scratch("absent.json")), doctest::Contains("absent.json"));

  write_text(path, "{not json");
  CHECK_THROWS_WITH(load_json(path), doctest::Contains(path.c_str()));
}

TEST_CASE("complex json: locals, bindings, and invisibility round-trip") {
  Hypergraph G = sample_graph();
  SimplicialComplex S = induced_complex(G, {{0, 1}, {2, 0}}, 2);
  const int top = S.ordinal(IndexSet::of({0, 1}));
  S.set_local(top, 3, SimplicialComplex::kInvisible);
  SimplicialComplex T = complex_from_json(complex_json(S));
  CHECK(T.r() == S.r());
  CHECK(T.s() == S.s());
  CHECK(T.h() == S.h());
  for (std::size_t ord = 0; ord < S.index_sets().size(); ++ord) {
    CHECK(T.binding(static_cast<int>(ord)) == S.binding(static_cast<int>(ord)));
    for (std::int64_t off = 0; off < S.edge_count(static_cast<int>(ord)); ++off)
      CHECK(T.local_at(static_cast<int>(ord), off) == S.local_at(static_cast<int>(ord), off));
  }

  Json j = complex_json(S);
  j["local"].erase("1");
  CHECK_THROWS_WITH(complex_from_json(j), doctest::Contains("local colors for index set {1}"));
  Json bad = complex_json(S);
  bad["s"] = 0;
  CHECK_THROWS_AS(complex_from_json(bad), ValidationError);
}

TEST_CASE("pattern json: cells and invisibility round-trip through files") {
  UniformPattern F = UniformPattern::blank(3, 2, 2);
  F.top[0] = {0, -1, 1, 0};
  F.top[2] = {1, 1, -1, -1};
  const std::string path = scratch("pattern.json");
  save_pattern(F, path);
  UniformPattern G = load_pattern(path);
  CHECK(G.r == 3);
  CHECK(G.k == 2);
  CHECK(G.h == 2);
  CHECK(G.top == F.top);

  Json j = pattern_json(F);
  j["top"].erase("0,2");
  CHECK_THROWS_WITH(pattern_from_json(j), doctest::Contains("top colors for index set {0,2}"));
}

TEST_CASE("set json: grid and simplex values validate on the way in") {
  GridSet S = GridSet::from_points(4, 2, {{0, 0}, {3, 1}});
  GridSet S2 = grid_set_from_json(grid_set_json(S));
  CHECK(S2.N == 4);
  CHECK(S2.r == 2);
  CHECK(S2.points == S.points);

  SimplexSet X = SimplexSet::from_points(3, 1, {{0, 2}, {2, 0}});
  SimplexSet X2 = simplex_set_from_json(simplex_set_json(X));
  CHECK(X2.points == X.points);

  Json bad = simplex_set_json(X);
  bad["points"].push_back(std::vector<int>{1, 0});  // sums to 1, not 2
  CHECK_THROWS_AS(simplex_set_from_json(bad), ValidationError);
}

TEST_CASE("point lines: comments, separators, and line-numbered failures") {
  auto pts = parse_point_lines("0 1\n# full comment\n\n2,3\n 4 , 5 # trailing\n-1 7");
  std::vector<std::vector<int>> want = {{0, 1}, {2, 3}, {4, 5}, {-1, 7}};
  CHECK(pts == want);
  CHECK_THROWS_WITH_AS(parse_point_lines("0\n1 x\n"), "line 2: not an integer tuple",
                       ValidationError);
  CHECK(parse_point_lines("").empty());
}

TEST_CASE("grid set loading: object, array, and text formats agree") {
  GridSet S = GridSet::from_points(3, 2, {{0, 0}, {1, 2}});
  const std::string obj = scratch("s_obj.json"), arr = scratch("s_arr.json"),
                    txt = scratch("s_txt.txt");
  write_text(obj, grid_set_json(S).dump());
  write_text(arr, "[[0,0],[1,2]]");
  write_text(txt, "0 0\n1 2\n");
  CHECK(load_grid_set(obj, 3, 2).points == S.points);
  CHECK(load_grid_set(arr, 3, 2).points == S.points);
  CHECK(load_grid_set(txt, 3, 2).points == S.points);

  write_text(txt, "5 5\n");
  CHECK_THROWS_WITH(load_grid_set(txt, 3, 2), doctest::Contains(txt.c_str()));
}

TEST_CASE("csv: escaping follows the quoting rules and tables are deterministic") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
  CHECK(csv_table({"a", "b"}, {{"1", "x,y"}, {"2", "z"}}) == "a,b\n1,\"x,y\"\n2,z\n");
}

TEST_CASE("report emission: json and csv bytes are stable; unknown formats refuse") {
  Json report;
  report["header"] = std::vector<std::string>{"id", "value"};
  report["rows"] = Json::array({Json::array({"a", 1}), Json::array({"b,c", "0"})});
  const std::string pj = scratch("r.json"), pc = scratch("r.csv");
  emit_report(report, "json", pj);
  CHECK(read_text(pj) == report.dump(2) + "\n");
  emit_report(report, "csv", pc);
  CHECK(read_text(pc) == "id,value\na,1\n\"b,c\",0\n");
  emit_report(report, "json", scratch("r2.json"));
  CHECK(read_text(scratch("r2.json")) == read_text(pj));
  CHECK_THROWS_AS(emit_report(report, "yaml", scratch("r.yaml")), ValidationError);
}

TEST_CASE("digests and manifests: pinned hashes and replayable sidecars") {
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("a") == "af63dc4c8601ec8c");

  RunManifest m;
  m.version = "0.1.0";
  m.command = {"hreg", "gen", "--seed", "42"};
  m.seed = 42;
  m.input_digests["in.json"] = digest_hex("payload");
  Json params;
  params["n"] = 8;
  const std::string path = scratch("run.manifest.json");
  write_manifest(m, params, path);
  Json back = load_json(path);
  CHECK(back["tool"] == "hreg");
  CHECK(back["version"] == "0.1.0");
  CHECK(back["seed"] == 42);
  CHECK(back["command"].size() == 4);
  CHECK(back["inputs"]["in.json"] == digest_hex("payload"));
  CHECK(back["params"]["n"] == 8);

  write_manifest(m, params, scratch("run2.manifest.json"));
  CHECK(read_text(path) == read_text(scratch("run2.manifest.json")));
}

TEST_CASE("rational formatting: reduced fractions and integers") {
  CHECK(rational_str(Rational(3, 6)) == "1/2");
  CHECK(rational_str(Rational(4, 2)) == "2");
  CHECK(rational_str(Rational(0)) == "0");
}
