#ifndef PBLAB_SELFTEST_HPP
#define PBLAB_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pblab {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Fast in-process run of the library's core invariants: ring and bracket
/// axioms, reduction round-trips, gcd properties, closed-form lattice
/// minima against brute force, the constructive bracket-degree bound, and
/// parser round-trips. Seeded and deterministic.
std::vector<CheckResult> run_selftest(uint64_t seed);

}  // namespace pblab

#endif
