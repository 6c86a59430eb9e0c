#ifndef HREG_PARALLEL_HPP
#define HREG_PARALLEL_HPP

#include <cstdint>
#include <vector>

#ifdef HREG_HAVE_OPENMP
#include <omp.h>
#endif

namespace hreg {

// Which kernel implementation to run.  Serial twins are kept so tests can
// assert bit-identical agreement with the OpenMP versions.
enum class KernelMode { Serial, Parallel };

inline int hardware_threads() {
#ifdef HREG_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Upper bound on the stripe index for a loop of n iterations; size per-stripe
// accumulator arrays with this.
inline int stripe_count(std::int64_t n) {
  if (n <= 0) return 1;
  std::int64_t s = static_cast<std::int64_t>(hardware_threads()) * 4;
  if (s > n) s = n;
  return static_cast<int>(s < 1 ? 1 : s);
}

// Runs fn(stripe, begin, end) over [0, n) split into contiguous stripes.
// Each stripe writes only its own slot of whatever accumulator the caller
// keeps, and the caller merges slots in stripe order, so the result is
// independent of thread count and scheduling.
template <typename Fn>
void for_each_stripe(std::int64_t n, KernelMode mode, Fn&& fn) {
  if (n <= 0) return;
  int stripes = mode == KernelMode::Parallel ? stripe_count(n) : 1;
#ifndef HREG_HAVE_OPENMP
  stripes = 1;
#endif
  std::int64_t chunk = (n + stripes - 1) / stripes;
#ifdef HREG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (mode == KernelMode::Parallel)
#endif
  for (int s = 0; s < stripes; ++s) {
    std::int64_t b = s * chunk;
    std::int64_t e = b + chunk < n ? b + chunk : n;
    if (b < e) fn(s, b, e);
  }
}

}  // namespace hreg

#endif
