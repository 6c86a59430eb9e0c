#ifndef HREG_CORPUS_HPP
#define HREG_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hreg/complex.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/io.hpp"
#include "hreg/lemma_lab.hpp"

namespace hreg {

// Pinned fixture for the exact lemma checks: everything about an instance
// (graph, pattern, equivalence, functional) derives from `seed` alone, so a
// corpus file fully determines the report.
struct CorpusInstance {
  std::string id;
  int r = 2, k = 2, h = 1, m = 1;
  std::vector<int> parts;
  std::vector<int> b;
  std::uint64_t seed = 1;
};

// { "instances": [ { "id", "r", "k", "h", "m", "parts", "b", "seed" } ] }
std::vector<CorpusInstance> load_corpus(const std::string& path);

Hypergraph corpus_graph(const CorpusInstance& inst);
// Induced by a seeded vertex assignment, so every edge is visible and the
// conditioning events of the checks are nonempty.
SimplicialComplex corpus_complex(const CorpusInstance& inst, const Hypergraph& G);
NestedEquivalence corpus_equivalence(const CorpusInstance& inst);
TestFunctional corpus_functional(const CorpusInstance& inst, const Hypergraph& G,
                                 const SimplicialComplex& S);

struct CorpusRow {
  std::string instance;  // "<id>/<check>"
  Rational lhs, rhs, margin;
  bool pass = false;
};

// The three exact checks on one instance; each row passes iff margin >= 0.
std::vector<CorpusRow> run_corpus_instance(const CorpusInstance& inst);

// {"header": ["instance","lhs","rhs","margin"], "rows": [...]}, ready for
// emit_report in either format.
Json corpus_report(const std::vector<CorpusRow>& rows);

}  // namespace hreg

#endif
