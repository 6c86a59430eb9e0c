#include "hreg/lemma_lab.hpp"

#include <algorithm>
#include <map>

#include "hreg/errors.hpp"
#include "hreg/pmap.hpp"
#include "hreg/regularize.hpp"

namespace hreg {
namespace {

struct ClassStat {
  std::int64_t n = 0;
  Rational sum;
};

Rational second_moment(const std::vector<int>& labels, const std::vector<Rational>& x) {
  std::map<int, ClassStat> cls;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ClassStat& c = cls[labels[i]];
    ++c.n;
    c.sum += x[i];
  }
  Rational acc = 0;
  for (const auto& [lab, c] : cls) {
    (void)lab;
    acc += c.sum * c.sum / c.n;  // n * mean^2
  }
  return acc / static_cast<std::int64_t>(x.size());
}

// Edge of S compiled against the pattern's vertex grid: slot ids into a flat
// h-per-part assignment plus the host stride to resolve the mapped offset.
struct CompiledEdge {
  int ord = 0;  // host ordinal
  std::vector<std::pair<int, std::int64_t>> terms;
  ColorId want = 0;
};

CompiledEdge compile_edge(const Hypergraph& G, const SimplicialComplex& S, const PatternEdge& e) {
  CompiledEdge c;
  c.ord = G.ordinal(e.index);
  const std::vector<int> mem = e.index.members();
  for (std::size_t p = 0; p < mem.size(); ++p)
    c.terms.emplace_back(mem[p] * S.h() + e.tuple[p], G.strides(c.ord)[p]);
  c.want = S.host_color(e.ord, e.off);
  return c;
}

std::int64_t host_offset(const CompiledEdge& c, const std::vector<int>& digits) {
  std::int64_t off = 0;
  for (const auto& [slot, stride] : c.terms) off += digits[slot] * stride;
  return off;
}

// Enumerates all h-per-part vertex assignments; fn(digits) for each.
template <typename Fn>
std::int64_t for_each_assignment(const Hypergraph& G, int h, std::int64_t budget, Fn&& fn) {
  const int slots = G.r() * h;
  BigInt total_big = 1;
  for (int s = 0; s < slots; ++s) total_big *= G.part_sizes()[s / h];
  if (total_big > budget)
    throw BudgetExceeded("assignment space " + total_big.str() + " exceeds budget " +
                         std::to_string(budget));
  const std::int64_t total = total_big.convert_to<std::int64_t>();
  std::vector<int> digits(slots, 0);
  for (std::int64_t i = 0; i < total; ++i) {
    fn(digits);
    for (int s = slots - 1; s >= 0; --s) {
      if (++digits[s] < G.part_sizes()[s / h]) break;
      digits[s] = 0;
    }
  }
  return total;
}

bool subedge_of(const PatternEdge& e, const PatternEdge& e0) {
  if (!e.index.subset_of(e0.index)) return false;
  const std::vector<int> mem = e.index.members(), mem0 = e0.index.members();
  for (std::size_t p = 0; p < mem.size(); ++p) {
    const auto q = std::find(mem0.begin(), mem0.end(), mem[p]) - mem0.begin();
    if (e.tuple[p] != e0.tuple[q]) return false;
  }
  return true;
}

}  // namespace

CsMargin check_nested_cauchy_schwarz(const NestedEquivalence& inst) {
  const std::size_t n = inst.x.size();
  if (n == 0 || inst.fine.size() != n || inst.coarse.size() != n)
    throw ValidationError("nested equivalence needs matching nonempty label and value vectors");
  if (!partition_refines(inst.fine, inst.coarse))
    throw ValidationError("fine relation does not refine the coarse one");
  CsMargin out;
  out.lhs = second_moment(inst.fine, inst.x);
  out.rhs = second_moment(inst.coarse, inst.x);
  out.margin = out.lhs - out.rhs;
  return out;
}

CountingCheck check_counting_error_bound(const Hypergraph& G, const SimplicialComplex& S,
                                         std::int64_t budget) {
  CountingCheck out;
  std::vector<CompiledEdge> tops, lowers;
  std::vector<Rational> d_top;
  Rational prod_d = 1;
  std::map<TotalColor, Rational> dmemo;
  for (const PatternEdge& e : visible_edges(S)) {
    const CompiledEdge c = compile_edge(G, S, e);
    if (e.index.size() == G.k()) {
      tops.push_back(c);
      const TotalColor tc = pattern_total_color(S, G, e);
      auto it = dmemo.find(tc);
      if (it == dmemo.end()) it = dmemo.emplace(tc, relative_density(G, tc).value).first;
      d_top.push_back(it->second);
      prod_d *= it->second;
    } else {
      lowers.push_back(c);
    }
  }
  out.top_count = static_cast<int>(tops.size());
  if (tops.empty()) {  // both sides degenerate to 0
    out.applicable = true;
    out.holds = true;
    return out;
  }
  if (tops.size() > 30) throw ValidationError("too many top edges for subset enumeration");

  const std::uint32_t full = (1u << tops.size()) - 1;
  std::vector<Rational> subset_sum(full + 1, Rational(0));
  std::int64_t frame_count = 0, all_count = 0;
  for_each_assignment(G, S.h(), budget, [&](const std::vector<int>& digits) {
    for (const CompiledEdge& c : lowers)
      if (G.color_at(c.ord, host_offset(c, digits)) != c.want) return;
    ++frame_count;
    std::uint32_t hit = 0;
    for (std::size_t t = 0; t < tops.size(); ++t)
      if (G.color_at(tops[t].ord, host_offset(tops[t], digits)) == tops[t].want)
        hit |= 1u << t;
    if (hit == full) ++all_count;
    for (std::uint32_t D = 1; D <= full; ++D) {
      Rational term = 1;
      for (std::size_t t = 0; t < tops.size(); ++t)
        if (D & (1u << t)) term *= Rational(static_cast<int>((hit >> t) & 1u)) - d_top[t];
      subset_sum[D] += term;
    }
  });
  if (frame_count == 0) return out;  // inapplicable, flagged

  out.applicable = true;
  out.lhs = abs_rational(Rational(all_count, frame_count) - prod_d);
  Rational best = 0;
  for (std::uint32_t D = 1; D <= full; ++D) {
    const Rational v = abs_rational(subset_sum[D] / frame_count);
    if (v > best) best = v;
  }
  out.rhs = best * out.top_count;
  out.holds = out.lhs <= out.rhs;
  return out;
}

MeanSquareCheck check_mean_square_bound(const Hypergraph& G, const SimplicialComplex& S,
                                        const TestFunctional& F, int m,
                                        const ErrorFunction& delta, int e0_index,
                                        std::int64_t budget) {
  if (m < 1) throw ValidationError("mean-square bound needs m >= 1");
  MeanSquareCheck out;

  std::vector<PatternEdge> tops, lowers;
  for (const PatternEdge& e : visible_edges(S))
    (e.index.size() == G.k() ? tops : lowers).push_back(e);
  if (tops.empty()) throw ValidationError("mean-square bound needs a visible top edge");
  if (e0_index < 0 || e0_index >= static_cast<int>(tops.size()))
    throw ValidationError("e0 index out of range");
  if (F.f.size() != tops.size())
    throw ValidationError("one functional entry per visible top edge required");
  std::vector<CompiledEdge> ctops, clowers;
  for (const PatternEdge& e : tops) ctops.push_back(compile_edge(G, S, e));
  for (const PatternEdge& e : lowers) clowers.push_back(compile_edge(G, S, e));
  for (std::size_t t = 0; t < tops.size(); ++t) {
    if (static_cast<int>(F.f[t].size()) != G.table_size(ctops[t].ord))
      throw ValidationError("functional entry does not cover the color table");
    for (const Rational& v : F.f[t])
      if (abs_rational(v) > 1) throw ValidationError("functional values must lie in [-1,1]");
  }

  // Refusal unless delta is an exactly verified (k-1, 2h)-error function.
  {
    const std::vector<SimplicialComplex> fam = enumerate_complexes(G, G.k() - 1, 2 * S.h(), budget);
    VerifyConfig vc;
    vc.exact = true;
    vc.embed_budget = budget;
    const RegularityCertificate cert = verify_error_function(G, delta, 2 * S.h(), fam, vc);
    if (!cert.all_pass || !cert.exact ||
        !std::all_of(cert.checks.begin(), cert.checks.end(),
                     [](const FamilyCheck& c) { return c.exact; }))
      throw ValidationError("delta does not verify exactly as a (k-1,2h)-error function");
    out.delta_verified = true;
  }

  // Left side and its conditioned variant over Phi(h).
  Rational f_sum = 0;
  std::int64_t frame_count = 0;
  const std::int64_t maps_h =
      for_each_assignment(G, S.h(), budget, [&](const std::vector<int>& digits) {
        for (const CompiledEdge& c : clowers)
          if (G.color_at(c.ord, host_offset(c, digits)) != c.want) return;
        ++frame_count;
        Rational w = 1;
        for (std::size_t t = 0; t < tops.size(); ++t)
          w *= F.f[t][G.color_at(ctops[t].ord, host_offset(ctops[t], digits))];
        f_sum += w;
      });
  out.lhs_d = (f_sum / maps_h) * (f_sum / maps_h);

  // T1 and the conditioned inner moment over Phi(mh), per-edge weights fixed.
  const PatternEdge& e0 = tops[e0_index];
  const int ord0 = G.ordinal(e0.index);
  const TotalColor c0 = pattern_total_color(S, G, e0);
  const std::vector<ColorId> target(c0.entries.begin(), c0.entries.end() - 1);
  const std::int64_t edges0 = G.edge_count(ord0);
  std::vector<Rational> w_ind(edges0), w_raw(edges0);
  std::vector<char> in_frame(edges0, 0);
  std::int64_t estar_count = 0;
  for_each_edge(G, ord0, [&](std::int64_t off, const std::vector<int>& tuple) {
    const std::vector<ColorId> got = G.total_entries_at(ord0, tuple);
    w_raw[off] = F.f[e0_index][got.back()];
    const bool match = std::equal(target.begin(), target.end(), got.begin());
    w_ind[off] = match ? w_raw[off] : Rational(0);
    if (match) {
      in_frame[off] = 1;
      ++estar_count;
    }
  });

  const int r = G.r();
  const int mh = m * S.h();
  BigInt maps_big = 1;
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < mh; ++t) maps_big *= G.part_sizes()[i];
  if (maps_big > budget)
    throw BudgetExceeded("sample-map space " + maps_big.str() + " exceeds budget " +
                         std::to_string(budget));
  const std::int64_t maps_mh = maps_big.convert_to<std::int64_t>();

  Rational t1_sum = 0, cond_sum = 0;
  {
    PartitionwiseMap phi;
    phi.samples.assign(r, std::vector<int>(mh, 0));
    std::vector<int> digits(r * mh, 0);
    std::vector<Rational> s_ind, s_raw;
    std::vector<std::int64_t> n_cls;
    for (std::int64_t map = 0; map < maps_mh; ++map) {
      for (int i = 0; i < r; ++i)
        for (int t = 0; t < mh; ++t) phi.samples[i][t] = digits[i * mh + t];
      int ncls = 0;
      const std::vector<int> labels =
          regularized_frame_labels(G, ord0, phi, &ncls, KernelMode::Serial);
      s_ind.assign(ncls, Rational(0));
      s_raw.assign(ncls, Rational(0));
      n_cls.assign(ncls, 0);
      for (std::int64_t off = 0; off < edges0; ++off) {
        s_ind[labels[off]] += w_ind[off];
        s_raw[labels[off]] += w_raw[off];
        ++n_cls[labels[off]];
      }
      for (int cl = 0; cl < ncls; ++cl) t1_sum += s_ind[cl] * s_ind[cl] / n_cls[cl];
      for (std::int64_t off = 0; off < edges0; ++off)
        if (in_frame[off]) {
          const int cl = labels[off];
          const Rational mean = s_raw[cl] / n_cls[cl];
          cond_sum += mean * mean;
        }
      for (int s = r * mh - 1; s >= 0; --s) {
        if (++digits[s] < G.part_sizes()[s / mh]) break;
        digits[s] = 0;
      }
    }
  }
  const Rational t1 = t1_sum / edges0 / maps_mh;

  // Density products over the lower visible edges.
  if (!delta.all_rational())
    throw ValidationError("mean-square bound needs rational error values");
  Rational p_all = 1, p_out = 1, p_out_minus = 1;
  bool guard1 = true;
  std::map<TotalColor, Rational> dmemo;
  for (std::size_t j = 0; j < lowers.size(); ++j) {
    const TotalColor tc = pattern_total_color(S, G, lowers[j]);
    auto it = dmemo.find(tc);
    if (it == dmemo.end()) it = dmemo.emplace(tc, relative_density(G, tc).value).first;
    const Rational d = it->second;
    const Rational dr = delta.at(tc).as_rational();
    const Rational up = d + dr < 1 ? d + dr : Rational(1);
    const Rational dn = d - dr > 0 ? d - dr : Rational(0);
    p_all *= up;
    if (!subedge_of(lowers[j], e0)) {
      p_out *= up;
      p_out_minus *= dn;
    }
    if (d <= 2 * dr) guard1 = false;  // 1/2 d - delta > 0 fails
  }
  out.rhs_d = t1 * p_all * (p_out + Rational(1, m));
  out.d_holds = out.lhs_d <= out.rhs_d;

  out.guard = guard1 && Rational(1, m) <= p_out_minus;
  out.c_applicable = frame_count > 0 && estar_count > 0;
  if (out.c_applicable) {
    const Rational lc = f_sum / frame_count;
    out.lhs_c = lc * lc;
    const Rational inner = cond_sum / estar_count / maps_mh;
    out.rhs_c = 2 * pow_rational(Rational(3), 2 * static_cast<unsigned>(lowers.size())) * inner;
    if (out.guard) out.c_holds = out.lhs_c <= out.rhs_c;
  }
  return out;
}

}  // namespace hreg
