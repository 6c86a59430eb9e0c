// Wall-time comparison of the OpenMP kernels against their serial twins on
// seeded instances; results must agree bit-for-bit or the run fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "hreg/applications.hpp"
#include "hreg/complex.hpp"
#include "hreg/density.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/parallel.hpp"
#include "hreg/rng.hpp"

using namespace hreg;

namespace {

int g_mismatches = 0;

template <typename Fn>
double ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s %10.1f ms %10.1f ms %7.2fx  %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "match" : "MISMATCH");
  if (!match) ++g_mismatches;
}

}  // namespace

int main() {
  std::printf("%-28s %13s %13s %8s  %s\n", "kernel", "serial", "parallel", "speedup",
              "results");
  std::printf("threads available: %d\n", hardware_threads());

  {
    Rng g(90001);
    Hypergraph G = random_hypergraph(2, 2, {64, 64}, {1, 2}, g);
    SimplicialComplex S = induced_complex(G, {{0, 1}, {0, 1}}, 2);
    Rational ps, pp;
    double ts = ms([&] { ps = embed_probability_exact(G, S, 1 << 30, KernelMode::Serial); });
    double tp = ms([&] { pp = embed_probability_exact(G, S, 1 << 30, KernelMode::Parallel); });
    row("embed count (16.8M maps)", ts, tp, ps == pp);
  }

  {
    Rng g(90002);
    Hypergraph G = random_hypergraph(2, 2, {256, 256}, {1, 2}, g);
    SimplicialComplex S = induced_complex(G, {{0, 1}, {0, 1}}, 2);
    McEstimate es, ep;
    double ts =
        ms([&] { es = embed_probability_mc(G, S, 4000000, 0.99, 42, KernelMode::Serial); });
    double tp =
        ms([&] { ep = embed_probability_mc(G, S, 4000000, 0.99, 42, KernelMode::Parallel); });
    row("embed monte carlo (4M)", ts, tp, es.value == ep.value && es.ci_half == ep.ci_half);
  }

  {
    Rng g(90003);
    std::vector<std::vector<int>> pts;
    for (int x = 0; x < 200; ++x)
      for (int y = 0; y < 200; ++y)
        if (g.uniform_int(2) == 0) pts.push_back({x, y});
    GridSet S = GridSet::from_points(200, 2, pts);
    std::vector<std::vector<int>> F = {{0, 0}, {1, 1}, {2, 1}};
    std::vector<std::pair<std::vector<int>, long long>> rs, rp;
    double ts = ms([&] { rs = brute_force_oracle(S, F, 1 << 30, KernelMode::Serial); });
    double tp = ms([&] { rp = brute_force_oracle(S, F, 1 << 30, KernelMode::Parallel); });
    row("configuration scan (24M)", ts, tp, rs == rp);
  }

  if (g_mismatches) {
    std::printf("%d kernel(s) disagree between modes\n", g_mismatches);
    return 1;
  }
  return 0;
}
