#ifndef PBLAB_RNG_HPP
#define PBLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "pblab/rational.hpp"

namespace pblab {

/// Deterministic random source. mt19937_64 output is pinned by the
/// standard and all derived draws below avoid std::uniform_* (whose
/// mappings are implementation-defined), so identical seeds give
/// identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  /// Uniform integer in [lo, hi], inclusive, by rejection sampling.
  int64_t uniform(int64_t lo, int64_t hi) {
    require(lo <= hi, errc::invalid_parameters, "empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(next());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<int64_t>(x % span);
  }

  bool chance(int num, int den) { return uniform(1, den) <= num; }

  /// Rational with numerator in [-bound, bound] and denominator in
  /// [1, den_bound]; optionally excludes zero.
  Rational rational(int bound, int den_bound, bool nonzero) {
    while (true) {
      Rational r(uniform(-bound, bound), uniform(1, den_bound));
      if (!nonzero || !r.is_zero()) return r;
    }
  }

  /// Stream splitter: a fixed-point-free mix of (seed, index) so per-index
  /// work is independent of evaluation order.
  static uint64_t mix(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pblab

#endif
