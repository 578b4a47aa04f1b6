#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace semidlog {

/// Engine used everywhere a seed is accepted. Always caller-owned.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by rejection sampling on raw engine output.
/// Unlike std::uniform_int_distribution the result sequence is identical
/// across standard libraries.
inline std::uint64_t uniform_in(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::domain_error("uniform_in: empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return rng();
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v > limit);
  return lo + v % n;
}

}  // namespace semidlog
