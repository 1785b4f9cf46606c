#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace fuzzylie {

// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so seeded runs would differ between standard libraries. These are not.

/// Uniform in [0, n) by rejection on the top of the 64-bit range. n > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % n;
}

/// Uniform in [lo, hi].
inline std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

/// Fisher-Yates.
template <class It>
void seeded_shuffle(It first, It last, std::mt19937_64& rng) {
  for (auto n = last - first; n > 1; --n) std::swap(first[n - 1], first[uniform_below(rng, n)]);
}

}  // namespace fuzzylie
