#include "hreg/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hreg/errors.hpp"

namespace hreg {
namespace {

// (slot, stride) pairs resolving a constraint's edge offset from map digits.
struct CompiledConstraint {
  int ord = 0;
  std::vector<std::pair<int, std::int64_t>> terms;
  ColorId expected = 0;
};

std::vector<CompiledConstraint> compile(const Hypergraph& G, int h,
                                        const std::vector<EmbedConstraint>& cs) {
  std::vector<CompiledConstraint> out;
  out.reserve(cs.size());
  for (const EmbedConstraint& c : cs) {
    const IndexSet I = G.index_sets()[c.ord];
    const std::vector<int> mem = I.members();
    if (static_cast<int>(c.slots.size()) != I.size())
      throw ValidationError("embed constraint arity does not match its index set");
    CompiledConstraint cc;
    cc.ord = c.ord;
    cc.expected = c.expected;
    if (c.expected < 0 || c.expected >= static_cast<ColorId>(G.table(c.ord).size()))
      throw ValidationError("embed constraint color out of range");
    for (std::size_t p = 0; p < mem.size(); ++p) {
      const int slot = c.slots[p];
      if (slot < 0 || slot >= G.r() * h) throw ValidationError("embed constraint slot out of range");
      if (slot / h != mem[p])
        throw ValidationError("embed constraint slot lies in the wrong part");
      cc.terms.emplace_back(slot, G.strides(c.ord)[p]);
    }
    out.push_back(std::move(cc));
  }
  return out;
}

bool matches(const CompiledConstraint& c, const Hypergraph& G, const std::vector<int>& digits) {
  std::int64_t off = 0;
  for (const auto& [slot, stride] : c.terms) off += digits[slot] * stride;
  return G.coloring(c.ord)[off] == c.expected;
}

}  // namespace

ConditionalProbability relative_density(const Hypergraph& G, const TotalColor& c) {
  const int ord = G.ordinal(c.index);
  const std::vector<ColorId> want_frame(c.entries.begin(), c.entries.end() - 1);
  ConditionalProbability out;
  for_each_edge(G, ord, [&](std::int64_t, const std::vector<int>& tuple) {
    const std::vector<ColorId> got = G.total_entries_at(ord, tuple);
    if (!std::equal(want_frame.begin(), want_frame.end(), got.begin())) return;
    ++out.denominator_count;
    if (got.back() == c.top()) ++out.numerator_count;
  });
  if (out.denominator_count > 0) {
    out.defined = true;
    out.value = Rational(out.numerator_count, out.denominator_count);
  }
  return out;
}

std::vector<DensityRow> density_table(const Hypergraph& G, int ord) {
  const std::map<TotalColor, std::int64_t> census = total_color_census(G, ord);
  std::map<std::vector<ColorId>, std::int64_t> frame_mass;
  for (const auto& [c, n] : census) {
    std::vector<ColorId> f(c.entries.begin(), c.entries.end() - 1);
    frame_mass[f] += n;
  }
  std::vector<DensityRow> rows;
  for (const auto& [c, n] : census) {
    DensityRow row;
    row.color = c;
    row.edges = n;
    row.frame_edges = frame_mass.at({c.entries.begin(), c.entries.end() - 1});
    row.density = Rational(row.edges, row.frame_edges);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<EmbedConstraint> embed_constraints(const Hypergraph& G, const SimplicialComplex& S,
                                               int max_size) {
  if (S.r() != G.r()) throw ValidationError("complex and hypergraph disagree on part count");
  std::vector<EmbedConstraint> out;
  for (const PatternEdge& e : visible_edges(S, max_size)) {
    EmbedConstraint c;
    c.ord = G.ordinal(e.index);
    for (std::size_t p = 0; p < e.tuple.size(); ++p)
      c.slots.push_back(e.index.members()[p] * S.h() + e.tuple[p]);
    c.expected = S.host_color(e.ord, e.off);
    out.push_back(std::move(c));
  }
  return out;
}

EmbedCounts count_embeddings(const Hypergraph& G, int h, const std::vector<EmbedConstraint>& need,
                             const std::vector<EmbedConstraint>& given, std::int64_t budget,
                             KernelMode mode) {
  if (h < 1) throw ValidationError("embedding needs h >= 1");
  const int slots = G.r() * h;
  std::vector<int> radix(slots);
  BigInt total_big = 1;
  for (int s = 0; s < slots; ++s) {
    radix[s] = G.part_sizes()[s / h];
    total_big *= radix[s];
  }
  if (total_big > budget)
    throw BudgetExceeded("embedding map space " + total_big.str() + " exceeds budget " +
                         std::to_string(budget));
  const std::int64_t total = total_big.convert_to<std::int64_t>();

  const std::vector<CompiledConstraint> cneed = compile(G, h, need);
  const std::vector<CompiledConstraint> cgiven = compile(G, h, given);

  const int stripes = stripe_count(total);
  std::vector<std::int64_t> sat(stripes, 0), cond(stripes, 0);
  for_each_stripe(total, mode, [&](int stripe, std::int64_t begin, std::int64_t end) {
    std::vector<int> digits(slots, 0);
    std::int64_t rest = begin;
    for (int s = slots - 1; s >= 0; --s) {
      digits[s] = static_cast<int>(rest % radix[s]);
      rest /= radix[s];
    }
    for (std::int64_t i = begin; i < end; ++i) {
      bool g = true;
      for (const CompiledConstraint& c : cgiven)
        if (!matches(c, G, digits)) {
          g = false;
          break;
        }
      if (g) {
        ++cond[stripe];
        bool n = true;
        for (const CompiledConstraint& c : cneed)
          if (!matches(c, G, digits)) {
            n = false;
            break;
          }
        if (n) ++sat[stripe];
      }
      for (int s = slots - 1; s >= 0; --s) {
        if (++digits[s] < radix[s]) break;
        digits[s] = 0;
      }
    }
  });

  EmbedCounts out;
  out.total = total;
  for (int s = 0; s < stripes; ++s) {
    out.satisfying += sat[s];
    out.conditioning += cond[s];
  }
  return out;
}

Rational embed_probability_exact(const Hypergraph& G, const SimplicialComplex& S,
                                 std::int64_t budget, KernelMode mode) {
  const EmbedCounts n =
      count_embeddings(G, S.h(), embed_constraints(G, S), {}, budget, mode);
  return Rational(n.satisfying, n.total);
}

ConditionalProbability conditional_embed_probability(const Hypergraph& G,
                                                     const SimplicialComplex& S,
                                                     const std::vector<EmbedConstraint>& condition,
                                                     std::int64_t budget, KernelMode mode) {
  const std::vector<EmbedConstraint> all = embed_constraints(G, S);
  for (const EmbedConstraint& c : condition) {
    const bool known = std::any_of(all.begin(), all.end(), [&](const EmbedConstraint& a) {
      return a.ord == c.ord && a.slots == c.slots && a.expected == c.expected;
    });
    if (!known) throw ValidationError("conditioning edge is not a visible edge of the complex");
  }
  const EmbedCounts n = count_embeddings(G, S.h(), all, condition, budget, mode);
  ConditionalProbability out;
  out.numerator_count = n.satisfying;
  out.denominator_count = n.conditioning;
  if (n.conditioning > 0) {
    out.defined = true;
    out.value = Rational(n.satisfying, n.conditioning);
  }
  return out;
}

double hoeffding_half_width(std::int64_t samples, double confidence) {
  if (samples <= 0) throw ValidationError("Monte Carlo needs a positive sample count");
  if (!(confidence > 0 && confidence < 1)) throw ValidationError("confidence must lie in (0,1)");
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(samples)));
}

McEstimate embed_probability_mc(const Hypergraph& G, const std::vector<EmbedConstraint>& match,
                                int h, std::int64_t samples, double confidence, std::uint64_t seed,
                                KernelMode mode) {
  const double ci = hoeffding_half_width(samples, confidence);  // validates up front
  const std::vector<CompiledConstraint> cs = compile(G, h, match);
  const int slots = G.r() * h;

  constexpr std::int64_t kBatch = 4096;
  const std::int64_t batches = (samples + kBatch - 1) / kBatch;
  std::vector<std::int64_t> hits(batches, 0);
  const Rng root(seed);
  for_each_stripe(batches, mode, [&](int, std::int64_t begin, std::int64_t end) {
    std::vector<int> digits(slots);
    for (std::int64_t b = begin; b < end; ++b) {
      Rng rng = root.child(static_cast<std::uint64_t>(b));
      const std::int64_t n = std::min(kBatch, samples - b * kBatch);
      for (std::int64_t i = 0; i < n; ++i) {
        for (int s = 0; s < slots; ++s)
          digits[s] = static_cast<int>(rng.uniform_int(G.part_sizes()[s / h]));
        bool ok = true;
        for (const CompiledConstraint& c : cs)
          if (!matches(c, G, digits)) {
            ok = false;
            break;
          }
        if (ok) ++hits[b];
      }
    }
  });

  std::int64_t total_hits = 0;
  for (std::int64_t b = 0; b < batches; ++b) total_hits += hits[b];
  McEstimate out;
  out.value = static_cast<double>(total_hits) / static_cast<double>(samples);
  out.ci_half = ci;
  out.samples = samples;
  out.confidence = confidence;
  out.seed = seed;
  return out;
}

McEstimate embed_probability_mc(const Hypergraph& G, const SimplicialComplex& S,
                                std::int64_t samples, double confidence, std::uint64_t seed,
                                KernelMode mode) {
  return embed_probability_mc(G, embed_constraints(G, S), S.h(), samples, confidence, seed, mode);
}

}  // namespace hreg
