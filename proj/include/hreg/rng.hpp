#ifndef HREG_RNG_HPP
#define HREG_RNG_HPP

#include <cstdint>

namespace hreg {

// splitmix64 finalizer; stable across platforms and compilers.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic splittable generator.  All randomness in the library flows
// from one root seed through child() labels, so results never depend on call
// interleaving or thread scheduling: a consumer derives its own stream.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(mix64(seed)) {}

  // Independent stream addressed by (seed, label).
  Rng child(std::uint64_t label) const { return Rng(mix64(seed_ ^ mix64(label ^ 0xa5a5a5a5a5a5a5a5ULL))); }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n) by rejection; avoids the implementation-defined
  // std::uniform_int_distribution.
  int uniform_int(int n) {
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t limit = ~0ULL - (~0ULL % un);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

  // Uniform in [0,1) with 53 random bits; for Monte Carlo summaries only.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace hreg

#endif
