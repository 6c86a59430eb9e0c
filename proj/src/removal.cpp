#include "hreg/removal.hpp"

#include <algorithm>

#include "hreg/errors.hpp"
#include "hreg/pmap.hpp"
#include "hreg/regularize.hpp"
#include "hreg/rng.hpp"

namespace hreg {

UniformPattern UniformPattern::blank(int r, int k, int h) {
  if (k < 1 || r < k || h < 1) throw ValidationError("pattern needs 1 <= k <= r and h >= 1");
  UniformPattern F;
  F.r = r;
  F.k = k;
  F.h = h;
  std::int64_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= h;
  F.top.assign(F.top_sets().size(), std::vector<ColorId>(cells, -1));
  return F;
}

std::vector<IndexSet> UniformPattern::top_sets() const {
  std::vector<IndexSet> out;
  for (const IndexSet I : canonical_subsets(IndexSet::full(r), k))
    if (I.size() == k) out.push_back(I);
  return out;
}

std::int64_t UniformPattern::cell_count() const {
  std::int64_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= h;
  return cells;
}

void validate_pattern(const UniformPattern& F, const Hypergraph& G) {
  if (F.r != G.r() || F.k != G.k())
    throw ValidationError("pattern and hypergraph disagree on r or k");
  if (F.h < 1) throw ValidationError("pattern needs h >= 1");
  const std::vector<IndexSet> sets = F.top_sets();
  if (F.top.size() != sets.size())
    throw ValidationError("pattern needs one color block per full-size index set");
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (static_cast<std::int64_t>(F.top[s].size()) != F.cell_count())
      throw ValidationError("pattern block " + sets[s].str() + " has the wrong cell count");
    const int bo = G.table_size(G.ordinal(sets[s]));
    for (const ColorId c : F.top[s])
      if (c != -1 && (c < 0 || c >= bo))
        throw ValidationError("pattern color out of range on " + sets[s].str());
  }
}

std::vector<EmbedConstraint> pattern_constraints(const UniformPattern& F, const Hypergraph& G) {
  validate_pattern(F, G);
  std::vector<EmbedConstraint> out;
  const std::vector<IndexSet> sets = F.top_sets();
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const std::vector<int> mem = sets[s].members();
    std::vector<int> tuple(mem.size(), 0);
    for (std::int64_t off = 0; off < F.cell_count(); ++off) {
      if (F.top[s][off] != -1) {
        EmbedConstraint c;
        c.ord = G.ordinal(sets[s]);
        for (std::size_t p = 0; p < mem.size(); ++p) c.slots.push_back(mem[p] * F.h + tuple[p]);
        c.expected = F.top[s][off];
        out.push_back(std::move(c));
      }
      for (int p = static_cast<int>(mem.size()) - 1; p >= 0; --p) {
        if (++tuple[p] < F.h) break;
        tuple[p] = 0;
      }
    }
  }
  return out;
}

std::map<int, ColorId> spare_colors(const UniformPattern& F, const Hypergraph& G) {
  validate_pattern(F, G);
  std::map<int, ColorId> out;
  const std::vector<IndexSet> sets = F.top_sets();
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const int ord = G.ordinal(sets[s]);
    std::set<ColorId> used;
    for (const ColorId c : F.top[s])
      if (c != -1) used.insert(c);
    ColorId spare = -1;
    for (ColorId c = 0; c < static_cast<ColorId>(G.table_size(ord)); ++c)
      if (!used.count(c)) {
        spare = c;
        break;
      }
    if (spare == -1)
      throw ValidationError("pattern uses every color of " + sets[s].str() +
                            "; no spare color for recoloring");
    out[ord] = spare;
  }
  return out;
}

Hypergraph recolor_bad_edges(const Hypergraph& G, const Hypergraph& Gstar,
                             const std::set<TotalColor>& bad,
                             const std::map<int, ColorId>& spare) {
  if (Gstar.r() != G.r() || Gstar.k() != G.k() || Gstar.part_sizes() != G.part_sizes())
    throw ValidationError("regularized graph shape mismatch");
  Hypergraph out = G;
  for (int ord = 0; ord < static_cast<int>(G.index_sets().size()); ++ord) {
    if (G.index_sets()[ord].size() != G.k()) continue;
    const auto sp = spare.find(ord);
    if (sp == spare.end()) throw ValidationError("missing spare color for an index set");
    for_each_edge(G, ord, [&](std::int64_t off, const std::vector<int>& tuple) {
      TotalColor tc;
      tc.index = G.index_sets()[ord];
      tc.entries = Gstar.total_entries_at(ord, tuple);
      if (bad.count(tc)) out.set_color(ord, off, sp->second);
    });
  }
  return out;
}

RemovalOutcome removal_decision(const Hypergraph& G, const UniformPattern& F, const Rational& eps,
                                const RemovalConfig& cfg) {
  if (!(eps > 0 && eps < 1)) throw ValidationError("removal needs eps in (0,1)");
  validate_pattern(F, G);
  const int k = G.k();
  const int r = G.r();

  RemovalOutcome out;
  out.eps_bar = pow_rational(eps / (3 * pow_rational(Rational(2), k)), 2);

  // Practical-mode regularization; empty maps by default.
  std::vector<PartitionwiseMap> phis;
  const Rng root(cfg.seed);
  for (int s = 1; s <= k - 1; ++s) {
    const int m = static_cast<int>(cfg.map_sizes.size()) >= s ? cfg.map_sizes[s - 1] : 0;
    Rng rng = root.child(static_cast<std::uint64_t>(s));
    phis.push_back(sample_map(G, m, rng));
  }
  const Hypergraph gstar = regularize(G, phis, cfg.mode);

  const std::vector<SimplicialComplex> family =
      enumerate_complexes(gstar, k, F.h, cfg.family_budget);
  const ErrorFunction delta =
      empirical_error_function(gstar, F.h, family, cfg.embed_budget, cfg.mode);
  VerifyConfig vc;
  vc.exact = true;
  vc.embed_budget = cfg.embed_budget;
  vc.mode = cfg.mode;
  const RegularityCertificate cert = verify_error_function(gstar, delta, F.h, family, vc);
  if (!cert.all_pass) throw std::logic_error("empirical error function failed its own family");
  out.delta_bound = cert.bound;
  out.a01_satisfied = cert.bound <= out.eps_bar;

  const std::set<TotalColor> bad = bad_colors(gstar, delta, out.eps_bar, true);
  out.bad_color_count = static_cast<int>(bad.size());
  const std::map<int, ColorId> spare = spare_colors(F, G);
  out.g_prime = recolor_bad_edges(G, gstar, bad, spare);

  for (int ord = 0; ord < static_cast<int>(G.index_sets().size()); ++ord) {
    if (G.index_sets()[ord].size() != k) continue;
    std::int64_t diff = 0;
    for (std::int64_t off = 0; off < G.edge_count(ord); ++off)
      if (out.g_prime.color_at(ord, off) != G.color_at(ord, off)) ++diff;
    out.changed_edges += diff;
    out.change_fraction[G.index_sets()[ord].str()] = Rational(diff, G.edge_count(ord));
  }
  bool within_eps = true;
  for (const auto& [is, frac] : out.change_fraction) {
    (void)is;
    if (frac > eps) within_eps = false;
  }

  // Surviving copy classes: enumerate Phi(h), keep maps that are copies in
  // G', and group them by the induced complex in G*.  Their interval products
  // lower-bound the copy probability of F in G.
  const std::vector<EmbedConstraint> match = pattern_constraints(F, G);
  const EmbedCounts in_g = count_embeddings(G, F.h, match, {}, cfg.embed_budget, cfg.mode);
  const EmbedCounts in_gp =
      count_embeddings(out.g_prime, F.h, match, {}, cfg.embed_budget, cfg.mode);
  out.copy_probability = Rational(in_g.satisfying, in_g.total);
  out.residual_copy_probability = Rational(in_gp.satisfying, in_gp.total);

  std::set<std::string> seen;
  std::vector<SimplicialComplex> survivors;
  {
    const int slots = r * F.h;
    BigInt space = 1;
    for (int s = 0; s < slots; ++s) space *= G.part_sizes()[s / F.h];
    if (space > static_cast<std::int64_t>(cfg.scan_budget))
      throw BudgetExceeded("survivor scan space " + space.str() + " exceeds budget " +
                           std::to_string(cfg.scan_budget));
    const std::vector<IndexSet> sets = F.top_sets();
    std::vector<int> digits(slots, 0);
    const std::int64_t total = space.convert_to<std::int64_t>();
    for (std::int64_t i = 0; i < total; ++i) {
      bool copy = true;
      for (const EmbedConstraint& c : match) {
        const int ord = c.ord;
        std::int64_t off = 0;
        for (std::size_t p = 0; p < c.slots.size(); ++p)
          off += static_cast<std::int64_t>(digits[c.slots[p]]) *
                 out.g_prime.strides(ord)[p];
        if (out.g_prime.color_at(ord, off) != c.expected) {
          copy = false;
          break;
        }
      }
      if (copy) {
        std::vector<std::vector<int>> assign(r);
        for (int s = 0; s < slots; ++s) assign[s / F.h].push_back(digits[s]);
        SimplicialComplex S = induced_complex(gstar, assign, k);
        // tops the pattern leaves unconstrained are invisible in S
        for (std::size_t si = 0; si < sets.size(); ++si) {
          const int sord = S.ordinal(sets[si]);
          for (std::int64_t off = 0; off < S.edge_count(sord); ++off)
            if (F.top[si][off] == -1) S.set_local(sord, off, SimplicialComplex::kInvisible);
        }
        if (seen.insert(S.str()).second) survivors.push_back(std::move(S));
      }
      for (int s = slots - 1; s >= 0; --s) {
        if (++digits[s] < G.part_sizes()[s / F.h]) break;
        digits[s] = 0;
      }
    }
  }
  out.survivor_count = static_cast<int>(survivors.size());

  out.copy_lower_bound = 0;
  std::map<TotalColor, Rational> dmemo;
  for (const SimplicialComplex& S : survivors) {
    Rational term = 1;
    for (const PatternEdge& e : visible_edges(S)) {
      const TotalColor tc = pattern_total_color(S, gstar, e);
      auto it = dmemo.find(tc);
      if (it == dmemo.end()) it = dmemo.emplace(tc, relative_density(gstar, tc).value).first;
      const NonnegReal& dv = delta.at(tc);
      const Rational dr = dv.is_rational() ? dv.as_rational() : dv.upper_rational();
      const Rational lo = it->second - dr;
      term *= lo > 0 ? lo : Rational(0);
    }
    out.copy_lower_bound += term;
  }

  if (out.residual_copy_probability == 0 && within_eps) {
    out.case_id = 1;
    return out;
  }
  if (out.copy_probability > 0) {
    out.case_id = 2;
    return out;
  }
  throw Undecided(
      "recoloring exceeds the change budget at this eps yet the graph has no copies; "
      "neither outcome is certifiable");
}

}  // namespace hreg
