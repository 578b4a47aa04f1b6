#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <map>
#include <vector>

#include "semidlog.hpp"

namespace oracle {

using semidlog::Exponent;

inline std::uint64_t mod_pow_naive(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  for (std::uint64_t i = 0; i < e; ++i) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % n);
  return r;
}

// x^e by e-1 plain multiplications, bypassing the counting context.
template <class S>
semidlog::element_t<S> power_naive(const S& sg, const semidlog::element_t<S>& x, Exponent e) {
  auto r = x;
  for (Exponent i = 1; i < e; ++i) r = sg.multiply(r, x);
  return r;
}

// Cycle structure from a key -> first exponent map.
template <class S>
semidlog::CycleStructure cycle_by_map(const S& sg, const semidlog::element_t<S>& x) {
  std::map<semidlog::Key, Exponent> seen;
  auto cur = x;
  for (Exponent k = 1;; ++k) {
    auto [it, fresh] = seen.emplace(sg.key(cur), k);
    if (!fresh) return {it->second, k - it->second};
    cur = sg.multiply(cur, x);
  }
}

// All m in [1, limit] with x^m = y.
template <class S>
std::vector<Exponent> all_logs(const S& sg, const semidlog::element_t<S>& x, const semidlog::element_t<S>& y,
                               Exponent limit) {
  std::vector<Exponent> out;
  auto cur = x;
  for (Exponent m = 1; m <= limit; ++m) {
    if (cur == y) out.push_back(m);
    cur = sg.multiply(cur, x);
  }
  return out;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) a %= b, std::swap(a, b);
  return a;
}

}  // namespace oracle
