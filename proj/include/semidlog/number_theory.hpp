#pragma once

// Integer support for the cycle and dlog solvers. None of this touches the
// semigroup, so none of it is counted as a multiplication.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "semidlog/random.hpp"

namespace semidlog {

using u128 = unsigned __int128;

/// Smallest r with r*r >= n.
constexpr std::uint64_t ceil_sqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  std::uint64_t lo = 1, hi = std::uint64_t{1} << 32;  // hi*hi >= 2^64 > n
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<u128>(mid) * mid >= n) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) noexcept { return a / b + (a % b != 0); }

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin; the first twelve prime bases certify every
/// 64-bit input.
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Smallest prime strictly greater than n.
inline std::uint64_t next_prime_above(std::uint64_t n) {
  if (n < 2) return 2;
  std::uint64_t c = n + 1;
  while (!is_prime(c)) {
    if (c == ~std::uint64_t{0}) throw std::overflow_error("next_prime_above: no 64-bit prime above n");
    ++c;
  }
  return c;
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

inline std::uint64_t expand(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : f)
    for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

namespace detail {

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n
// or n itself if this polynomial failed.
inline std::uint64_t brent_rho(std::uint64_t n, std::uint64_t c, std::uint64_t y0) {
  auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
  std::uint64_t y = y0, x = y0, ys = y0, g = 1, q = 1;
  constexpr std::uint64_t batch = 128;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

inline void split_composite(std::uint64_t n, std::vector<std::uint64_t>& primes, Rng& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  std::uint64_t d = n;
  while (d == n) d = brent_rho(n, uniform_in(rng, 1, n - 1), uniform_in(rng, 0, n - 1));
  split_composite(d, primes, rng);
  split_composite(n / d, primes, rng);
}

}  // namespace detail

/// Complete factorization of n (1 <= n < 2^63): trial division to 10^6,
/// then Pollard-Brent on whatever cofactor remains.
inline Factorization factor_integer(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factor_integer: n must be positive");
  if (n >= (std::uint64_t{1} << 63)) throw std::domain_error("factor_integer: n must be below 2^63");
  Factorization out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  take(2);
  constexpr std::uint64_t trial_limit = 1'000'000;
  for (std::uint64_t p = 3; p <= trial_limit && p * p <= n; p += 2) take(p);
  if (n > 1) {
    std::vector<std::uint64_t> primes;
    Rng rng(0x5eed'fac7u);
    detail::split_composite(n, primes, rng);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      out.push_back({primes[i], static_cast<unsigned>(j - i)});
      i = j;
    }
  }
  return out;
}

struct Congruence {
  std::uint64_t residue;
  std::uint64_t modulus;
};

/// Unique x in [0, prod moduli) with x = residue_i mod modulus_i.
/// Throws std::domain_error for non-coprime moduli.
inline Congruence crt_combine(const std::vector<Congruence>& parts) {
  Congruence acc{0, 1};
  for (const auto& [r, m] : parts) {
    if (m == 0) throw std::domain_error("crt_combine: zero modulus");
    if (std::gcd(acc.modulus, m) != 1) throw std::domain_error("crt_combine: moduli are not pairwise coprime");
    // acc.residue + acc.modulus * k = r (mod m)
    const std::uint64_t inv = [&] {
      // modular inverse of acc.modulus mod m by extended Euclid
      __int128 a = static_cast<__int128>(acc.modulus % m), b = m, x0 = 1, x1 = 0;
      while (b) {
        __int128 q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      }
      __int128 v = x0 % static_cast<__int128>(m);
      if (v < 0) v += m;
      return static_cast<std::uint64_t>(v);
    }();
    const std::uint64_t diff = ((r % m) + m - acc.residue % m) % m;
    const std::uint64_t k = mulmod(diff, inv, m);
    const u128 combined = static_cast<u128>(acc.modulus) * k + acc.residue;
    acc.modulus *= m;
    acc.residue = static_cast<std::uint64_t>(combined % acc.modulus);
  }
  return acc;
}

}  // namespace semidlog
