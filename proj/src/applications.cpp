#include "hreg/applications.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hreg/errors.hpp"
#include "hreg/rng.hpp"

namespace hreg {
namespace {

BigInt pow_big(std::int64_t base, int exp) {
  BigInt p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

std::string point_str(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

SimplexSet SimplexSet::from_points(int N, int k, const std::vector<std::vector<int>>& pts) {
  if (N < 1 || k < 1) throw ValidationError("simplex set needs N >= 1 and k >= 1");
  SimplexSet S;
  S.N = N;
  S.k = k;
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != k + 1)
      throw ValidationError("simplex point " + point_str(p) + " has " +
                            std::to_string(p.size()) + " coordinates, want " +
                            std::to_string(k + 1));
    long long sum = 0;
    for (int v : p) {
      if (v < 0 || v >= N)
        throw ValidationError("simplex point " + point_str(p) + " leaves [0," +
                              std::to_string(N) + ")");
      sum += v;
    }
    if (sum != static_cast<long long>(N) - 1)
      throw ValidationError("simplex point " + point_str(p) + " sums to " + std::to_string(sum) +
                            ", want " + std::to_string(N - 1));
    S.points.insert(p);
  }
  return S;
}

GridSet GridSet::from_points(int N, int r, const std::vector<std::vector<int>>& pts) {
  if (N < 1 || r < 1) throw ValidationError("grid set needs N >= 1 and r >= 1");
  GridSet S;
  S.N = N;
  S.r = r;
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != r)
      throw ValidationError("grid point " + point_str(p) + " has " + std::to_string(p.size()) +
                            " coordinates, want " + std::to_string(r));
    for (int v : p)
      if (v < 0 || v >= N)
        throw ValidationError("grid point " + point_str(p) + " leaves [0," + std::to_string(N) +
                              ")");
    S.points.insert(p);
  }
  return S;
}

Hypergraph corner_hypergraph(const SimplexSet& S) {
  int k = S.k, r = k + 1, N = S.N;
  if (r > 30) throw ValidationError("corner graph needs k + 1 <= 30 parts");
  auto sets = canonical_subsets(IndexSet::full(r), k);
  std::vector<std::vector<std::string>> tables(sets.size());
  std::vector<std::vector<ColorId>> colorings(sets.size());
  for (std::size_t ord = 0; ord < sets.size(); ++ord) {
    auto members = sets[ord].members();
    int s = static_cast<int>(members.size());
    std::int64_t cells = 1;
    for (int i = 0; i < s; ++i) cells *= N;
    if (s < k) {
      tables[ord] = {"u"};
      colorings[ord].assign(cells, 0);
      continue;
    }
    tables[ord] = {"red", "blue"};
    // An edge is red iff some member of S projects onto it.
    std::set<std::vector<int>> proj;
    std::vector<int> q(k);
    for (const auto& p : S.points) {
      for (int i = 0; i < k; ++i) q[i] = p[members[i]];
      proj.insert(q);
    }
    colorings[ord].assign(cells, kBlue);
    std::vector<int> tuple(k, 0);
    for (std::int64_t off = 0; off < cells; ++off) {
      if (proj.count(tuple)) colorings[ord][off] = kRed;
      for (int pos = k - 1; pos >= 0; --pos) {
        if (++tuple[pos] < N) break;
        tuple[pos] = 0;
      }
    }
  }
  return Hypergraph::build(r, k, std::vector<int>(r, N), std::move(tables),
                           std::move(colorings));
}

UniformPattern all_red_pattern(int k) {
  UniformPattern F = UniformPattern::blank(k + 1, k, 1);
  for (auto& cells : F.top)
    for (auto& c : cells) c = kRed;
  return F;
}

std::optional<CornerSolution> find_simplex_corner(const SimplexSet& S, const CornerConfig& cfg) {
  int k = S.k, N = S.N;
  int dims = k + 1;
  BigInt space = pow_big(N, dims);
  if (space > cfg.budget)
    throw BudgetExceeded("corner scan over N^(k+1) = " + space.str() + " anchors exceeds budget " +
                         std::to_string(cfg.budget));
  std::int64_t n = space.convert_to<std::int64_t>();

  std::vector<std::int64_t> hit(stripe_count(n), -1);
  for_each_stripe(n, cfg.mode, [&](int stripe, std::int64_t b, std::int64_t e) {
    std::vector<int> a(dims);
    std::int64_t rem = b;
    for (int i = dims - 1; i >= 0; --i) {
      a[i] = static_cast<int>(rem % N);
      rem /= N;
    }
    std::vector<int> p(dims);
    for (std::int64_t off = b; off < e; ++off) {
      long long sum = 0;
      for (int v : a) sum += v;
      long long c = static_cast<long long>(N) - 1 - sum;
      if (c != 0) {
        bool ok = true;
        for (int i = 0; i < dims && ok; ++i) {
          long long vi = a[i] + c;
          if (vi < 0 || vi >= N) {
            ok = false;
            break;
          }
          p = a;
          p[i] = static_cast<int>(vi);
          ok = S.contains(p);
        }
        if (ok) {
          hit[stripe] = off;
          return;
        }
      }
      for (int pos = dims - 1; pos >= 0; --pos) {
        if (++a[pos] < N) break;
        a[pos] = 0;
      }
    }
  });

  std::int64_t best = -1;
  for (std::int64_t h : hit)
    if (h >= 0 && (best < 0 || h < best)) best = h;
  if (best < 0) return std::nullopt;

  CornerSolution sol;
  sol.a.resize(dims);
  std::int64_t rem = best;
  for (int i = dims - 1; i >= 0; --i) {
    sol.a[i] = static_cast<int>(rem % N);
    rem /= N;
  }
  long long sum = 0;
  for (int v : sol.a) sum += v;
  sol.c = static_cast<long long>(N) - 1 - sum;
  return sol;
}

namespace {

// T for one center: the points of S whose reflection through the center is
// also in S.
std::set<std::vector<int>> reflect_kernel(const GridSet& S, const std::vector<int>& two_x) {
  std::set<std::vector<int>> T;
  std::vector<int> m(S.r);
  for (const auto& t : S.points) {
    bool in = true;
    for (int i = 0; i < S.r; ++i) {
      m[i] = two_x[i] - t[i];
      if (m[i] < 0 || m[i] >= S.N) {
        in = false;
        break;
      }
    }
    if (in && S.contains(m)) T.insert(t);
  }
  return T;
}

}  // namespace

Symmetrization symmetrize_set(const GridSet& S, std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("symmetrization needs at least one trial");
  int r = S.r, N = S.N;
  int side = 2 * N - 1;  // possible doubled-center coordinates 0 .. 2N-2
  BigInt space = pow_big(side, r);

  Symmetrization out;
  out.exhaustive = BigInt(trials) >= space;

  std::vector<int> best_center;
  std::size_t best_size = 0;
  bool have = false;
  auto consider = [&](const std::vector<int>& center) {
    auto T = reflect_kernel(S, center);
    if (!have || T.size() > best_size) {
      have = true;
      best_size = T.size();
      best_center = center;
    }
  };

  if (out.exhaustive) {
    std::int64_t n = space.convert_to<std::int64_t>();
    std::vector<int> center(r, 0);
    for (std::int64_t off = 0; off < n; ++off) {
      consider(center);
      for (int pos = r - 1; pos >= 0; --pos) {
        if (++center[pos] < side) break;
        center[pos] = 0;
      }
    }
  } else {
    Rng root(seed);
    std::vector<int> center(r);
    for (std::int64_t j = 0; j < trials; ++j) {
      Rng rng = root.child(static_cast<std::uint64_t>(j));
      for (int i = 0; i < r; ++i) center[i] = rng.uniform_int(side);
      consider(center);
    }
  }

  out.two_x = best_center;
  out.T.N = N;
  out.T.r = r;
  out.T.points = reflect_kernel(S, best_center);
  // (0.98 / 2^r) * density^2 * N^r with density = |S| / N^r.
  BigInt s2 = BigInt(static_cast<std::int64_t>(S.points.size()));
  s2 *= s2;
  out.target = Rational(BigInt(49) * s2, BigInt(50) * pow_big(2, r) * pow_big(N, r));
  out.meets_target = Rational(static_cast<std::int64_t>(out.T.points.size())) >= out.target;
  return out;
}

PatternReduction pattern_reduction(const std::vector<std::vector<int>>& F) {
  if (F.size() < 2) throw ValidationError("pattern reduction needs at least two points");
  std::set<std::vector<int>> distinct(F.begin(), F.end());
  if (distinct.size() != F.size()) throw ValidationError("pattern has a repeated point");
  std::size_t r = F.front().size();
  for (const auto& f : F)
    if (f.size() != r) throw ValidationError("pattern points disagree on dimension");

  PatternReduction red;
  red.f0 = *distinct.begin();  // lexicographically least
  for (const auto& f : distinct) {
    if (f == red.f0) continue;
    std::vector<int> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = f[i] - red.f0[i];
    red.columns.push_back(std::move(col));
  }
  std::sort(red.columns.begin(), red.columns.end());
  red.r_prime = static_cast<int>(red.columns.size());
  return red;
}

namespace {

void validate_pattern_points(const GridSet& S, const std::vector<std::vector<int>>& F) {
  if (F.empty()) throw ValidationError("configuration pattern is empty");
  for (const auto& f : F)
    if (static_cast<int>(f.size()) != S.r)
      throw ValidationError("pattern point " + point_str(f) + " has " +
                            std::to_string(f.size()) + " coordinates, want " +
                            std::to_string(S.r));
  std::set<std::vector<int>> distinct(F.begin(), F.end());
  if (distinct.size() != F.size()) throw ValidationError("pattern has a repeated point");
}

std::optional<ConfigurationResult> verify_configuration(const GridSet& S,
                                                        const std::vector<std::vector<int>>& F,
                                                        const std::vector<int>& a, long long c,
                                                        const char* engine) {
  if (c < 1) return std::nullopt;
  ConfigurationResult res;
  res.a = a;
  res.c = c;
  res.engine = engine;
  std::vector<int> p(S.r);
  for (const auto& f : F) {
    for (int i = 0; i < S.r; ++i) {
      long long v = a[i] + c * static_cast<long long>(f[i]);
      if (v < 0 || v >= S.N) return std::nullopt;
      p[i] = static_cast<int>(v);
    }
    if (!S.contains(p)) return std::nullopt;
    res.witnesses.push_back(p);
  }
  return res;
}

// Symmetrize, reduce the pattern to the standard simplex directions, lift the
// symmetric kernel, and read a corner back as a configuration.
std::optional<ConfigurationResult> lift_engine(const GridSet& S,
                                               const std::vector<std::vector<int>>& F,
                                               const FindConfig& cfg) {
  auto sym = symmetrize_set(S, cfg.symmetrize_trials, cfg.seed);
  if (sym.T.points.empty()) return std::nullopt;
  auto red = pattern_reduction(F);
  int rp = red.r_prime, N = S.N;

  BigInt lift_space = pow_big(N, rp);
  if (lift_space > cfg.budget)
    throw BudgetExceeded("lift scan over N^(r') = " + lift_space.str() + " exceeds budget " +
                         std::to_string(cfg.budget));
  std::int64_t n = lift_space.convert_to<std::int64_t>();

  int nstar = rp * (N - 1) + 1;
  std::vector<std::vector<int>> lifted;
  std::vector<int> z(rp, 0), img(S.r), zhat(rp + 1);
  for (std::int64_t off = 0; off < n; ++off) {
    bool in = true;
    int zsum = 0;
    for (int i = 0; i < S.r && in; ++i) {
      long long v = 0;
      for (int j = 0; j < rp; ++j) v += static_cast<long long>(red.columns[j][i]) * z[j];
      if (v < 0 || v >= N) in = false;
      img[i] = static_cast<int>(v);
    }
    if (in && sym.T.contains(img)) {
      for (int j = 0; j < rp; ++j) zsum += z[j];
      zhat[0] = nstar - 1 - zsum;
      for (int j = 0; j < rp; ++j) zhat[j + 1] = z[j];
      lifted.push_back(zhat);
    }
    for (int pos = rp - 1; pos >= 0; --pos) {
      if (++z[pos] < N) break;
      z[pos] = 0;
    }
  }
  if (lifted.empty()) return std::nullopt;

  auto simplex = SimplexSet::from_points(nstar, rp, lifted);
  auto corner = find_simplex_corner(simplex, {cfg.budget, cfg.mode});
  if (!corner) return std::nullopt;

  // Tail of the corner anchor is the z-anchor; its image plus c times the
  // reduced directions sits in T, so gamma + cF does too (reflect if c < 0).
  std::vector<int> gamma(S.r);
  long long c = corner->c;
  for (int i = 0; i < S.r; ++i) {
    long long v = 0;
    for (int j = 0; j < rp; ++j)
      v += static_cast<long long>(red.columns[j][i]) * corner->a[j + 1];
    v -= c * static_cast<long long>(red.f0[i]);
    gamma[i] = static_cast<int>(v);
  }
  if (c < 0) {
    for (int i = 0; i < S.r; ++i) gamma[i] = sym.two_x[i] - gamma[i];
    c = -c;
  }
  return verify_configuration(S, F, gamma, c, "lift");
}

}  // namespace

std::optional<ConfigurationResult> find_configuration(const GridSet& S,
                                                      const std::vector<std::vector<int>>& F,
                                                      const FindConfig& cfg) {
  validate_pattern_points(S, F);

  if (F.size() == 1) {
    if (S.points.empty()) return std::nullopt;
    const auto& s = *S.points.begin();
    std::vector<int> a(S.r);
    for (int i = 0; i < S.r; ++i) a[i] = s[i] - F[0][i];
    return verify_configuration(S, F, a, 1, "scan");
  }

  try {
    auto hit = lift_engine(S, F, cfg);
    if (hit) return hit;
  } catch (const BudgetExceeded&) {
    // fall through to the direct scan, which has its own budget guard
  }

  auto all = brute_force_oracle(S, F, cfg.budget, cfg.mode);
  if (all.empty()) return std::nullopt;
  return verify_configuration(S, F, all.front().first, all.front().second, "scan");
}

std::optional<ConfigurationResult> find_ap(const GridSet& S, int m, const FindConfig& cfg) {
  if (S.r != 1) throw ValidationError("progression search needs a one-dimensional set");
  if (m < 1) throw ValidationError("progression length must be positive");
  std::vector<std::vector<int>> F;
  for (int j = 0; j < m; ++j) F.push_back({j});
  return find_configuration(S, F, cfg);
}

std::vector<std::pair<std::vector<int>, long long>> brute_force_oracle(
    const GridSet& S, const std::vector<std::vector<int>>& F, std::int64_t budget,
    KernelMode mode) {
  validate_pattern_points(S, F);
  int r = S.r, N = S.N;
  std::vector<int> fmin(r, F[0][0]), fmax(r, F[0][0]);
  for (int i = 0; i < r; ++i) {
    fmin[i] = fmax[i] = F[0][i];
    for (const auto& f : F) {
      fmin[i] = std::min(fmin[i], f[i]);
      fmax[i] = std::max(fmax[i], f[i]);
    }
  }

  std::vector<std::pair<std::vector<int>, long long>> out;
  BigInt scanned = 0;
  for (long long c = 1; c <= N; ++c) {
    std::vector<long long> lo(r), wide(r);
    BigInt bvol = 1;
    bool feasible = true;
    for (int i = 0; i < r; ++i) {
      lo[i] = -c * fmin[i];
      long long hi = static_cast<long long>(N) - 1 - c * fmax[i];
      if (hi < lo[i]) {
        feasible = false;
        break;
      }
      wide[i] = hi - lo[i] + 1;
      bvol *= wide[i];
    }
    if (!feasible) continue;
    scanned += bvol;
    if (scanned > budget)
      throw BudgetExceeded("configuration scan needs more than " + std::to_string(budget) +
                           " anchor probes");
    std::int64_t vol = bvol.convert_to<std::int64_t>();

    std::vector<std::vector<std::pair<std::vector<int>, long long>>> slot(stripe_count(vol));
    for_each_stripe(vol, mode, [&](int stripe, std::int64_t b, std::int64_t e) {
      std::vector<int> a(r), p(r);
      std::int64_t rem = b;
      for (int i = r - 1; i >= 0; --i) {
        a[i] = static_cast<int>(lo[i] + rem % wide[i]);
        rem /= wide[i];
      }
      for (std::int64_t off = b; off < e; ++off) {
        bool ok = true;
        for (const auto& f : F) {
          for (int i = 0; i < r; ++i) p[i] = a[i] + static_cast<int>(c) * f[i];
          if (!S.contains(p)) {
            ok = false;
            break;
          }
        }
        if (ok) slot[stripe].emplace_back(a, c);
        for (int pos = r - 1; pos >= 0; --pos) {
          if (++a[pos] < static_cast<int>(lo[pos] + wide[pos])) break;
          a[pos] = static_cast<int>(lo[pos]);
        }
      }
    });
    for (auto& s : slot) out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hreg
