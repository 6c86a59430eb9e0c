#include "hreg/regularity.hpp"

#include <algorithm>
#include <cmath>

#include "hreg/errors.hpp"
#include "hreg/pmap.hpp"
#include "hreg/regularize.hpp"
#include "hreg/rng.hpp"

namespace hreg {
namespace {

unsigned checked_exponent(const BigInt& e) {
  if (e < 0 || e > (std::int64_t(1) << 20))
    throw BudgetExceeded("constant exponent " + e.str() + " is out of tractable range");
  return e.convert_to<unsigned>();
}

Rational density_or_one(const Hypergraph& G, const TotalColor& c,
                        std::map<TotalColor, Rational>& memo) {
  auto it = memo.find(c);
  if (it != memo.end()) return it->second;
  const ConditionalProbability d = relative_density(G, c);
  return memo.emplace(c, d.value).first->second;  // undefined keeps value 1
}

}  // namespace

Constants regularity_constants(int k, int h, int r, const BigInt& b_k, const Rational& eps) {
  if (k < 1 || r < k) throw ValidationError("constants need 1 <= k <= r");
  if (h < 1) throw ValidationError("constants need h >= 1");
  if (b_k < 1) throw ValidationError("constants need b_k >= 1");
  if (!(eps > 0 && eps < 1)) throw ValidationError("constants need 0 < eps < 1");

  Constants cst;
  cst.k = k;
  cst.h = h;
  cst.r = r;
  cst.b_k = b_k;
  cst.eps = eps;

  const BigInt rk = binomial(r, k);
  const Rational root = eps / (Rational(12) * pow_rational(Rational(2), k) * Rational(b_k) * Rational(rk));
  cst.sqrt_eps1 = root;
  cst.eps1 = root * root;

  BigInt hk = 1;
  for (int i = 0; i < k; ++i) hk *= h;
  const BigInt e_top = rk * hk;  // |V(S)| cap at the top size

  BigInt exp_sum = 0;
  BigInt hj = 1;
  for (int j = 1; j <= k - 1; ++j) {
    hj *= h;
    exp_sum += binomial(r, j) * hj;
  }

  Rational c2 = Rational(2) * Rational(e_top) * Rational(e_top);
  c2 *= pow_rational(Rational(b_k) / (2 * root), checked_exponent(2 * (e_top - 1)));
  c2 *= pow_rational(Rational(3), checked_exponent(2 * exp_sum));
  cst.c_squared = c2;
  return cst;
}

void ErrorFunction::set(const TotalColor& c, const NonnegReal& v) {
  if (v.compare(Rational(0)) < 0) throw ValidationError("error values are nonnegative");
  entries_[c] = v;
}

const NonnegReal& ErrorFunction::at(const TotalColor& c) const {
  auto it = entries_.find(c);
  return it == entries_.end() ? default_ : it->second;
}

bool ErrorFunction::all_rational() const {
  if (!default_.is_rational()) return false;
  for (const auto& [c, v] : entries_)
    if (!v.is_rational()) return false;
  return true;
}

EtaStatistic eta_statistic(const Hypergraph& G, const TotalColor& c, int m, int h,
                           const EtaConfig& cfg) {
  if (m < 0) throw ValidationError("eta needs m >= 0");
  if (h < 1) throw ValidationError("eta needs h >= 1");
  EtaStatistic out;
  out.color = c;
  out.m = m;
  out.exact = cfg.exact;

  const int ord = G.ordinal(c.index);
  const std::vector<ColorId> want_frame(c.entries.begin(), c.entries.end() - 1);
  std::vector<std::int64_t> frame_edges;
  std::vector<char> is_top(G.edge_count(ord), 0);
  for_each_edge(G, ord, [&](std::int64_t off, const std::vector<int>& tuple) {
    const std::vector<ColorId> got = G.total_entries_at(ord, tuple);
    if (!std::equal(want_frame.begin(), want_frame.end(), got.begin())) return;
    frame_edges.push_back(off);
    if (got.back() == c.top()) is_top[off] = 1;
  });
  if (frame_edges.empty()) return out;  // frame event empty: undefined
  out.defined = true;

  const ConditionalProbability dres = relative_density(G, c);
  const Rational d = dres.value;
  const int r = G.r();
  const int mh = m * h;

  if (cfg.exact) {
    BigInt total_big = 1;
    for (int i = 0; i < r; ++i)
      for (int t = 0; t < mh; ++t) total_big *= G.part_sizes()[i];
    if (total_big > cfg.budget)
      throw BudgetExceeded("eta map space " + total_big.str() + " exceeds budget " +
                           std::to_string(cfg.budget));
    const std::int64_t total = total_big.convert_to<std::int64_t>();

    const int stripes = stripe_count(total);
    std::vector<Rational> sums(stripes, Rational(0));
    for_each_stripe(total, cfg.mode, [&](int stripe, std::int64_t begin, std::int64_t end) {
      PartitionwiseMap phi;
      phi.samples.assign(r, std::vector<int>(mh, 0));
      std::vector<std::int64_t> cls_n, cls_top;
      for (std::int64_t map = begin; map < end; ++map) {
        std::int64_t rest = map;
        for (int i = r - 1; i >= 0; --i)
          for (int t = mh - 1; t >= 0; --t) {
            phi.samples[i][t] = static_cast<int>(rest % G.part_sizes()[i]);
            rest /= G.part_sizes()[i];
          }
        int ncls = 0;
        const std::vector<int> labels =
            regularized_frame_labels(G, ord, phi, &ncls, KernelMode::Serial);
        cls_n.assign(ncls, 0);
        cls_top.assign(ncls, 0);
        for (std::int64_t off = 0; off < G.edge_count(ord); ++off) {
          ++cls_n[labels[off]];
          if (is_top[off]) ++cls_top[labels[off]];
        }
        for (std::int64_t e : frame_edges) {
          const Rational p(cls_top[labels[e]], cls_n[labels[e]]);
          const Rational dev = p - d;
          sums[stripe] += dev * dev;
        }
      }
    });
    Rational sum = 0;
    for (const Rational& s : sums) sum += s;
    out.value = sum / (Rational(total_big) * Rational(std::int64_t(frame_edges.size())));
    return out;
  }

  // Monte Carlo over (map, frame edge) pairs; batches are seed-addressed so
  // the estimate is independent of scheduling.
  const std::int64_t samples = cfg.samples;
  const double ci = hoeffding_half_width(samples, cfg.confidence);
  const double dd = static_cast<double>(d.convert_to<double>());
  constexpr std::int64_t kBatch = 1024;
  const std::int64_t batches = (samples + kBatch - 1) / kBatch;
  std::vector<double> acc(batches, 0.0);
  const Rng root(cfg.seed);
  for_each_stripe(batches, cfg.mode, [&](int, std::int64_t begin, std::int64_t end) {
    PartitionwiseMap phi;
    phi.samples.assign(r, std::vector<int>(mh, 0));
    std::vector<std::int64_t> cls_n, cls_top;
    for (std::int64_t b = begin; b < end; ++b) {
      Rng rng = root.child(static_cast<std::uint64_t>(b));
      const std::int64_t n = std::min(kBatch, samples - b * kBatch);
      for (std::int64_t s = 0; s < n; ++s) {
        for (int i = 0; i < r; ++i)
          for (int t = 0; t < mh; ++t)
            phi.samples[i][t] = static_cast<int>(rng.uniform_int(G.part_sizes()[i]));
        const std::int64_t e =
            frame_edges[rng.uniform_int(static_cast<int>(frame_edges.size()))];
        int ncls = 0;
        const std::vector<int> labels =
            regularized_frame_labels(G, ord, phi, &ncls, KernelMode::Serial);
        cls_n.assign(ncls, 0);
        cls_top.assign(ncls, 0);
        for (std::int64_t off = 0; off < G.edge_count(ord); ++off) {
          ++cls_n[labels[off]];
          if (is_top[off]) ++cls_top[labels[off]];
        }
        const double p = static_cast<double>(cls_top[labels[e]]) /
                         static_cast<double>(cls_n[labels[e]]);
        acc[b] += (p - dd) * (p - dd);
      }
    }
  });
  double sum = 0;
  for (std::int64_t b = 0; b < batches; ++b) sum += acc[b];
  out.mc.value = sum / static_cast<double>(samples);
  out.mc.ci_half = ci;
  out.mc.samples = samples;
  out.mc.confidence = cfg.confidence;
  out.mc.seed = cfg.seed;
  return out;
}

std::set<TotalColor> bad_colors(const Hypergraph& G, const ErrorFunction& delta_low,
                                const Rational& eps1, bool include_full_delta) {
  if (!(eps1 > 0)) throw ValidationError("bad colors need eps1 > 0");
  std::set<TotalColor> out;
  std::map<TotalColor, Rational> dmemo;
  for (int ord = 0; ord < static_cast<int>(G.index_sets().size()); ++ord) {
    const IndexSet I = G.index_sets()[ord];
    for (const auto& [c, cnt] : total_color_census(G, ord)) {
      (void)cnt;
      bool bad = false;
      for (const IndexSet J : canonical_subsets(I, I.size())) {
        const TotalColor sub = restrict_total_color(c, J);
        const Rational bo(G.table_size(G.ordinal(J)));
        if (J != I || include_full_delta) {
          // delta(sub) >= sqrt(eps1)/|C_J|, compared through squares
          if (delta_low.at(sub).square() * bo * bo >= eps1) {
            bad = true;
            break;
          }
        }
        // d(sub) <= 2 sqrt(eps1)/|C_J|, both sides nonnegative
        const Rational d = density_or_one(G, sub, dmemo);
        if (d * d * bo * bo <= 4 * eps1) {
          bad = true;
          break;
        }
      }
      if (bad) out.insert(c);
    }
  }
  return out;
}

EmbedInterval embed_interval(const Hypergraph& G, const SimplicialComplex& S,
                             const ErrorFunction& delta) {
  std::map<TotalColor, Rational> dmemo;
  EmbedInterval out;
  out.lower = 1;
  out.upper = 1;
  for (const PatternEdge& e : visible_edges(S)) {
    const TotalColor c = pattern_total_color(S, G, e);
    const Rational d = density_or_one(G, c, dmemo);
    const NonnegReal& dv = delta.at(c);
    Rational dr;
    if (dv.is_rational()) {
      dr = dv.as_rational();
    } else {
      // Underestimates of delta shrink [d-., d+.] — a pass against the
      // shrunk interval certifies a pass against the true one.
      dr = dv.lower_rational();
      out.exact = false;
    }
    const Rational lo = d - dr, hi = d + dr;
    out.lower *= lo > 0 ? lo : Rational(0);
    out.upper *= hi < 1 ? hi : Rational(1);
  }
  return out;
}

ErrorFunction empirical_error_function(const Hypergraph& G, int h,
                                       const std::vector<SimplicialComplex>& family,
                                       std::int64_t embed_budget, KernelMode mode) {
  struct Item {
    Rational embed;
    Rational dev;                                // |embed - prod d|
    std::map<TotalColor, int> color_mult;        // distinct colors with multiplicity
    std::map<TotalColor, Rational> d;
  };
  std::vector<Item> items;
  items.reserve(family.size());
  std::map<TotalColor, Rational> dmemo;
  for (const SimplicialComplex& S : family) {
    if (S.h() != h) throw ValidationError("family complex has the wrong h");
    Item it;
    it.embed = embed_probability_exact(G, S, embed_budget, mode);
    Rational prod = 1;
    for (const PatternEdge& e : visible_edges(S)) {
      const TotalColor c = pattern_total_color(S, G, e);
      const Rational d = density_or_one(G, c, dmemo);
      prod *= d;
      ++it.color_mult[c];
      it.d[c] = d;
    }
    it.dev = abs_rational(it.embed - prod);
    items.push_back(std::move(it));
  }

  std::map<TotalColor, Rational> delta;
  for (const Item& it : items)
    for (const auto& [c, mult] : it.color_mult) {
      const Rational share = it.dev / mult;
      auto [pos, fresh] = delta.emplace(c, share);
      if (!fresh && pos->second < share) pos->second = share;
    }

  // Uniform attribution is a heuristic; widen the offending colors until the
  // whole family verifies.  delta = 1 always passes, so this terminates.
  for (int round = 0;; ++round) {
    if (round > 200) throw std::logic_error("error-function widening failed to converge");
    bool ok = true;
    for (const Item& it : items) {
      Rational lower = 1, upper = 1;
      for (const auto& [c, mult] : it.color_mult)
        for (int q = 0; q < mult; ++q) {
          const Rational d = it.d.at(c), dr = delta.at(c);
          const Rational lo = d - dr, hi = d + dr;
          lower *= lo > 0 ? lo : Rational(0);
          upper *= hi < 1 ? hi : Rational(1);
        }
      if (it.embed < lower || it.embed > upper) {
        ok = false;
        for (const auto& [c, mult] : it.color_mult) {
          (void)mult;
          Rational& v = delta.at(c);
          v = v * 2;
          if (v > 1) v = 1;
          if (v == 0) v = it.dev > 0 ? it.dev : Rational(1);
        }
      }
    }
    if (ok) break;
  }

  ErrorFunction out;
  for (const auto& [c, v] : delta) out.set(c, NonnegReal::from_rational(v));
  return out;
}

ErrorFunction faithful_error_function(const Hypergraph& G, const ErrorFunction& lower,
                                      const Constants& cst, int m, const EtaConfig& eta_cfg) {
  if (!eta_cfg.exact)
    throw ValidationError("the proof-shaped error function needs the exact eta path");
  if (cst.k != G.k()) throw ValidationError("constants were built for a different k");
  ErrorFunction out = lower;
  const std::set<TotalColor> bad = bad_colors(G, lower, cst.eps1, false);
  for (int ord = 0; ord < static_cast<int>(G.index_sets().size()); ++ord) {
    if (G.index_sets()[ord].size() != G.k()) continue;
    for (const auto& [c, cnt] : total_color_census(G, ord)) {
      (void)cnt;
      if (bad.count(c)) {
        out.set(c, NonnegReal::from_rational(1));
        continue;
      }
      const EtaStatistic eta = eta_statistic(G, c, m, cst.h, eta_cfg);
      out.set(c, NonnegReal::sqrt_of(cst.c_squared * eta.value));
    }
  }
  return out;
}

RegularityCertificate verify_error_function(const Hypergraph& G, const ErrorFunction& delta, int h,
                                            const std::vector<SimplicialComplex>& family,
                                            const VerifyConfig& cfg) {
  RegularityCertificate cert;
  cert.h = h;
  cert.exact = cfg.exact;
  cert.checks.resize(family.size());

  std::string digest_bytes;
  for (const SimplicialComplex& S : family) digest_bytes += S.str() + "\n";
  cert.family_digest = fnv1a64(digest_bytes);

  for (std::size_t i = 0; i < family.size(); ++i) {
    const SimplicialComplex& S = family[i];
    FamilyCheck& chk = cert.checks[i];
    chk.complex_repr = S.str();
    const EmbedInterval iv = embed_interval(G, S, delta);
    chk.lower = iv.lower;
    chk.upper = iv.upper;
    if (cfg.exact) {
      chk.embed = embed_probability_exact(G, S, cfg.embed_budget, cfg.mode);
      const Rational lo_margin = chk.embed - iv.lower;
      const Rational hi_margin = iv.upper - chk.embed;
      chk.margin = lo_margin < hi_margin ? lo_margin : hi_margin;
      chk.pass = chk.margin >= 0;
      chk.exact = iv.exact;
      if (!iv.exact) chk.note = "interval endpoints bracketed; margin is a lower bound";
    } else {
      chk.embed_mc = embed_probability_mc(G, S, cfg.samples, cfg.confidence,
                                          Rng(cfg.seed).child(i).next_u64(), cfg.mode);
      const double lo = iv.lower.convert_to<double>();
      const double hi = iv.upper.convert_to<double>();
      chk.pass = chk.embed_mc.value + chk.embed_mc.ci_half >= lo &&
                 chk.embed_mc.value - chk.embed_mc.ci_half <= hi;
      chk.exact = false;
      chk.note = "Monte Carlo consistency check, not a certificate";
    }
  }
  cert.all_pass = std::all_of(cert.checks.begin(), cert.checks.end(),
                              [](const FamilyCheck& c) { return c.pass; });

  cert.bound = 0;
  for (int ord = 0; ord < static_cast<int>(G.index_sets().size()); ++ord) {
    Rational mass = 0;
    for (const auto& [c, cnt] : total_color_census(G, ord)) {
      const NonnegReal& v = delta.at(c);
      Rational val;
      if (v.is_rational()) {
        val = v.as_rational();
      } else {
        val = v.upper_rational();
        cert.bound_exact = false;
      }
      mass += val * cnt;
    }
    const Rational avg = mass / G.edge_count(ord);
    const Rational scaled = avg * G.table_size(ord);
    if (scaled > cert.bound) cert.bound = scaled;
  }
  return cert;
}

RegBoundResult reg_upper_bound(const Hypergraph& G, int h, const RegBoundConfig& cfg) {
  if (h < 1) throw ValidationError("regularity bound needs h >= 1");
  RegBoundResult out;
  std::vector<SimplicialComplex> family;
  try {
    family = enumerate_complexes(G, G.k(), h, cfg.family_budget);
    out.family_exhaustive = true;
  } catch (const BudgetExceeded&) {
    const Rng root(cfg.seed);
    std::set<std::string> seen;
    for (int t = 0; t < cfg.sampled_family; ++t) {
      Rng rng = root.child(static_cast<std::uint64_t>(t));
      std::vector<std::vector<int>> assign(G.r());
      for (int i = 0; i < G.r(); ++i)
        for (int v = 0; v < h; ++v)
          assign[i].push_back(static_cast<int>(rng.uniform_int(G.part_sizes()[i])));
      SimplicialComplex S = induced_complex(G, assign, G.k());
      // Random invisibility at the top size only keeps closure intact.
      for (int ord = 0; ord < static_cast<int>(S.index_sets().size()); ++ord) {
        if (S.index_sets()[ord].size() != G.k()) continue;
        for (std::int64_t off = 0; off < S.edge_count(ord); ++off)
          if (rng.uniform_int(2) == 0) S.set_local(ord, off, SimplicialComplex::kInvisible);
      }
      if (seen.insert(S.str()).second) family.push_back(std::move(S));
    }
  }
  out.family_size = static_cast<int>(family.size());
  out.delta = empirical_error_function(G, h, family, cfg.embed_budget, cfg.mode);
  VerifyConfig vc;
  vc.exact = true;
  vc.embed_budget = cfg.embed_budget;
  vc.mode = cfg.mode;
  out.certificate = verify_error_function(G, out.delta, h, family, vc);
  return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t x = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    x ^= b;
    x *= 1099511628211ull;
  }
  return x;
}

}  // namespace hreg
