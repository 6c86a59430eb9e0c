#include "hreg/corpus.hpp"

#include "hreg/errors.hpp"
#include "hreg/regularity.hpp"
#include "hreg/rng.hpp"

namespace hreg {
namespace {

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ValidationError(std::string("corpus instance needs integer \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<int> get_ints(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ValidationError(std::string("corpus instance needs array \"") + key + "\"");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer())
      throw ValidationError(std::string("corpus \"") + key + "\" entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::vector<CorpusInstance> load_corpus(const std::string& path) {
  Json j = load_json(path);
  if (!j.contains("instances") || !j["instances"].is_array())
    throw ValidationError(path + ": corpus needs an \"instances\" array");
  std::vector<CorpusInstance> out;
  for (const auto& e : j["instances"]) {
    CorpusInstance inst;
    if (!e.contains("id") || !e["id"].is_string())
      throw ValidationError(path + ": corpus instance needs a string \"id\"");
    inst.id = e["id"].get<std::string>();
    inst.r = get_int(e, "r");
    inst.k = get_int(e, "k");
    inst.h = get_int(e, "h");
    inst.m = get_int(e, "m");
    inst.parts = get_ints(e, "parts");
    inst.b = get_ints(e, "b");
    inst.seed = static_cast<std::uint64_t>(get_int(e, "seed"));
    if (static_cast<int>(inst.parts.size()) != inst.r)
      throw ValidationError(inst.id + ": parts must list r sizes");
    if (static_cast<int>(inst.b.size()) != inst.k)
      throw ValidationError(inst.id + ": b must list k color counts");
    if (inst.h < 1 || inst.m < 1) throw ValidationError(inst.id + ": h and m must be >= 1");
    out.push_back(std::move(inst));
  }
  return out;
}

Hypergraph corpus_graph(const CorpusInstance& inst) {
  Rng rng = Rng(inst.seed).child(1);
  return random_hypergraph(inst.r, inst.k, inst.parts, inst.b, rng);
}

SimplicialComplex corpus_complex(const CorpusInstance& inst, const Hypergraph& G) {
  Rng rng = Rng(inst.seed).child(2);
  std::vector<std::vector<int>> assign(inst.r);
  for (int i = 0; i < inst.r; ++i)
    for (int t = 0; t < inst.h; ++t) assign[i].push_back(rng.uniform_int(inst.parts[i]));
  return induced_complex(G, assign, inst.k);
}

NestedEquivalence corpus_equivalence(const CorpusInstance& inst) {
  Rng rng = Rng(inst.seed).child(3);
  int n = 4 + rng.uniform_int(9);  // ground set of 4..12 points
  NestedEquivalence e;
  for (int i = 0; i < n; ++i) {
    int coarse = rng.uniform_int(3);
    e.coarse.push_back(coarse);
    e.fine.push_back(coarse * 4 + rng.uniform_int(2));
    e.x.emplace_back(rng.uniform_int(17) - 8, 1 + rng.uniform_int(4));
  }
  return e;
}

TestFunctional corpus_functional(const CorpusInstance& inst, const Hypergraph& G,
                                 const SimplicialComplex& S) {
  Rng rng = Rng(inst.seed).child(4);
  TestFunctional F;
  for (const PatternEdge& e : visible_edges(S)) {
    if (static_cast<int>(e.index.size()) != G.k()) continue;
    std::vector<Rational> row;
    int colors = G.table_size(G.ordinal(e.index));
    for (int c = 0; c < colors; ++c) {
      int q = 1 + rng.uniform_int(4);
      row.emplace_back(rng.uniform_int(2 * q + 1) - q, q);
    }
    F.f.push_back(std::move(row));
  }
  return F;
}

std::vector<CorpusRow> run_corpus_instance(const CorpusInstance& inst) {
  std::vector<CorpusRow> rows;

  CsMargin cs = check_nested_cauchy_schwarz(corpus_equivalence(inst));
  rows.push_back({inst.id + "/cauchy-schwarz", cs.lhs, cs.rhs, cs.margin, cs.margin >= 0});

  Hypergraph G = corpus_graph(inst);
  SimplicialComplex S = corpus_complex(inst, G);

  CountingCheck cc = check_counting_error_bound(G, S);
  rows.push_back({inst.id + "/counting", cc.lhs, cc.rhs, cc.rhs - cc.lhs,
                  !cc.applicable || cc.holds});

  ErrorFunction zero;
  MeanSquareCheck ms =
      check_mean_square_bound(G, S, corpus_functional(inst, G, S), inst.m, zero, 0);
  bool ms_pass = ms.delta_verified && ms.d_holds && (!ms.guard || ms.c_holds);
  rows.push_back({inst.id + "/mean-square", ms.lhs_d, ms.rhs_d, ms.rhs_d - ms.lhs_d, ms_pass});

  return rows;
}

Json corpus_report(const std::vector<CorpusRow>& rows) {
  Json report;
  report["header"] = Json::array({"instance", "lhs", "rhs", "margin"});
  report["rows"] = Json::array();
  for (const CorpusRow& r : rows)
    report["rows"].push_back(Json::array(
        {r.instance, rational_str(r.lhs), rational_str(r.rhs), rational_str(r.margin)}));
  return report;
}

}  // namespace hreg
