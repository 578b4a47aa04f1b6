#pragma once

// Cycle start / cycle length of a torsion element.
//
// For x with cycle start s and cycle length L the power sequence is
//   x, x^2, ..., x^{s-1}, x^s, ..., x^{s+L-1}, x^{s+L} = x^s, ...
// and x^a = x^b (a != b) holds iff a, b >= s and a = b mod L. Every
// collision-based routine below leans on that one fact.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semidlog/core.hpp"
#include "semidlog/number_theory.hpp"
#include "semidlog/random.hpp"

namespace semidlog {

struct CycleStructure {
  Exponent start = 1;   // s_x
  Exponent length = 1;  // L_x

  Exponent order() const noexcept { return start + length - 1; }
  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

class NotTorsion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reference oracle: walk x, x^2, ... until a key repeats. The first repeat
/// x^b = x^a (a < b) gives s = a, L = b - a.
template <Semigroup S>
CycleStructure brute_force_cycle(Context<S>& ctx, const element_t<S>& x, Exponent cap = Exponent{1} << 26) {
  std::unordered_map<Key, Exponent> seen;
  element_t<S> cur = x;
  for (Exponent e = 1;; ++e) {
    auto [it, inserted] = seen.emplace(ctx.key(cur), e);
    if (!inserted) return {it->second, e - it->second};
    if (e >= cap) throw NotTorsion("brute_force_cycle: not torsion within cap");
    cur = ctx.multiply(cur, x);
  }
}

// ---------------------------------------------------------------------------
// Deterministic cycle length

struct DeterministicRound {
  Exponent base = 0;    // N, or the certified exponent for a confirmation round
  Exponent stride = 0;  // q = ceil(sqrt(N))
  std::size_t table_size = 0;
  std::optional<Exponent> baby_hit;                         // j with x^N = x^{N+j}
  std::optional<std::pair<Exponent, Exponent>> giant_hit;  // (i, j) with x^{N+iq} = x^{N+j}
  bool hit() const noexcept { return baby_hit || giant_hit; }
};

struct DeterministicTrace {
  std::vector<DeterministicRound> rounds;
  /// Present when a giant hit could not be certified to lie past the cycle
  /// start; rerun from the certified exponent N+j, which is exact.
  std::optional<DeterministicRound> confirmation;
  std::uint64_t multiplications = 0;
  std::size_t peak_table_size = 0;
};

template <class Trace>
struct CycleLengthResult {
  Exponent length;
  Trace trace;
};

namespace detail {

struct RoundOutcome {
  DeterministicRound record;
  Exponent candidate = 0;  // 0 when the round found nothing
};

// One baby-step/giant-step round at base exponent N with stride q.
// Baby steps store x^{N+j} for 0 <= j < q and stop early on x^N = x^{N+j}
// (checked up to j = q).
// Giant steps x^{N+iq}, 1 <= i <= q, stop at the first table match.
template <Semigroup S>
RoundOutcome deterministic_round(Context<S>& ctx, const element_t<S>& x, Exponent base, Exponent q) {
  RoundOutcome out;
  out.record.base = base;
  out.record.stride = q;

  const element_t<S> head = power(ctx, x, base);
  std::vector<CollisionTable::Entry> entries;
  entries.reserve(q);
  entries.push_back({ctx.key(head), base});
  element_t<S> cur = head;
  for (Exponent j = 1; j < q; ++j) {
    cur = ctx.multiply(cur, x);
    if (ctx.equal(cur, head)) {
      out.record.baby_hit = j;
      out.record.table_size = entries.size();
      out.candidate = j;
      return out;
    }
    entries.push_back({ctx.key(cur), base + j});
  }
  const CollisionTable table(std::move(entries), base, 1, q - 1);
  out.record.table_size = table.size();

  element_t<S> giant = ctx.multiply(cur, x);  // x^{N+q}
  if (ctx.equal(giant, head)) {
    out.record.baby_hit = q;
    out.candidate = q;
    return out;
  }
  std::optional<element_t<S>> step;
  for (Exponent i = 1; i <= q; ++i) {
    if (i > 1) {
      if (!step) step = q == 1 ? x : power(ctx, x, q);
      giant = ctx.multiply(giant, *step);
    }
    const auto matches = table.find_matches(ctx.key(giant));
    if (matches.empty()) continue;
    // Largest j gives the smallest candidate; every match is a multiple of L.
    const Exponent j = matches.back() - base;
    out.record.giant_hit = std::pair{i, j};
    out.candidate = i * q - j;
    return out;
  }
  return out;
}

}  // namespace detail

/// Exact cycle length by doubling rounds N = 1, 2, 4, ... . With a known
/// bound N >= N_x a single round at N suffices. Every round stores at most
/// ceil(sqrt(N)) table entries.
template <Semigroup S>
CycleLengthResult<DeterministicTrace> deterministic_cycle_length(Context<S>& ctx, const element_t<S>& x,
                                                                 std::optional<Exponent> known_bound = std::nullopt) {
  const std::uint64_t before = ctx.multiplications();
  DeterministicTrace trace;
  Exponent n = known_bound.value_or(1);
  if (n == 0) throw std::domain_error("deterministic_cycle_length: bound must be positive");
  for (;; n *= 2) {
    const Exponent q = ceil_sqrt(n);
    auto outcome = detail::deterministic_round(ctx, x, n, q);
    trace.peak_table_size = std::max(trace.peak_table_size, outcome.record.table_size);
    trace.rounds.push_back(outcome.record);
    if (!outcome.record.hit()) {
      if (n > (Exponent{1} << 61)) throw NotTorsion("deterministic_cycle_length: no collision below 2^62");
      continue;
    }

    Exponent length = outcome.candidate;
    if (outcome.record.giant_hit && outcome.record.giant_hit->second != 0) {
      // x^N = x^{N+candidate} proves N >= s, and then the minimal giant hit is
      // exact. Otherwise only N+j is known to be in the cycle.
      const element_t<S> head = power(ctx, x, n);
      const element_t<S> shifted = ctx.multiply(head, power(ctx, x, length));
      if (!ctx.equal(shifted, head)) {
        const Exponent certified = n + outcome.record.giant_hit->second;
        auto confirm = detail::deterministic_round(ctx, x, certified, ceil_sqrt(length));
        trace.peak_table_size = std::max(trace.peak_table_size, confirm.record.table_size);
        if (confirm.candidate == 0) throw std::logic_error("deterministic_cycle_length: confirmation round found no collision");
        trace.confirmation = confirm.record;
        length = confirm.candidate;
      }
    }
    trace.multiplications = ctx.multiplications() - before;
    return {length, std::move(trace)};
  }
}

/// Cycle start from a known cycle length: double s until x^{s+L} = x^s,
/// then bisect the last window. O((log N_x)^2) multiplications.
template <Semigroup S>
Exponent cycle_start_search(Context<S>& ctx, const element_t<S>& x, Exponent length) {
  if (length == 0) throw std::domain_error("cycle_start_search: cycle length must be positive");
  const element_t<S> period = power(ctx, x, length);
  auto in_cycle = [&](Exponent c) {
    const element_t<S> xc = power(ctx, x, c);
    return ctx.equal(ctx.multiply(xc, period), xc);
  };
  Exponent s = 1;
  while (!in_cycle(s)) {
    if (s >= (Exponent{1} << 62)) throw std::domain_error("cycle_start_search: supplied length is not a multiple of the cycle length");
    s *= 2;
  }
  Exponent a = s / 2;
  while (s - a >= 2) {
    const Exponent c = a + (s - a) / 2;
    if (!in_cycle(c)) a = c;
    else s = c;
  }
  return s;
}

/// Cycle length by the deterministic rounds followed by the cycle start.
template <Semigroup S>
CycleStructure deterministic_cycle(Context<S>& ctx, const element_t<S>& x,
                                   std::optional<Exponent> known_bound = std::nullopt) {
  const Exponent length = deterministic_cycle_length(ctx, x, known_bound).length;
  return {cycle_start_search(ctx, x, length), length};
}

// ---------------------------------------------------------------------------
// Monico's baby-step giant-step with divisor stripping

struct MonicoOptions {
  std::optional<Exponent> bound;  // absent: N = 1, 2, 4, ... until collisions appear
  Exponent divisor_bound = 10'000;
};

struct MonicoTrace {
  Exponent bound = 0;  // N of the final round
  Exponent m = 0;
  Exponent prime = 0;  // q > N
  std::optional<Exponent> a1, b1, a2, b2;
  std::optional<std::pair<Exponent, Exponent>> duplicate;  // (i1, i2) with equal table entries
  Exponent g = 0;                  // multiple of L before stripping
  Exponent certified_exponent = 0; // exponent known to be past the cycle start
  Exponent divisor_bound = 0;
  std::vector<Exponent> divisors_tested;  // prime powers <= B, decreasing
  std::vector<Exponent> stripped;
  std::vector<Exponent> bounds_tried;
  std::uint64_t multiplications = 0;
  std::size_t table_size = 0;
};

/// Prime-power divisors of g that are <= bound, in decreasing order.
inline std::vector<Exponent> prime_power_divisors(Exponent g, Exponent bound) {
  std::vector<Exponent> out;
  Exponent w = g;
  for (Exponent p = 2; p <= bound && p <= w; ++p) {
    if (w % p != 0) continue;
    Exponent pk = 1;
    while (w % p == 0) {
      w /= p;
      pk *= p;
      if (pk <= bound) out.push_back(pk);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Divide g by each prime-power divisor d <= bound (decreasing order)
/// whenever x^{E + g/d} = x^E still holds. E must be >= s_x.
template <Semigroup S>
Exponent strip_divisors(Context<S>& ctx, const element_t<S>& x, Exponent certified, Exponent g, Exponent bound,
                        std::vector<Exponent>* tested = nullptr, std::vector<Exponent>* stripped = nullptr) {
  const auto divisors = prime_power_divisors(g, bound);
  if (tested) *tested = divisors;
  if (divisors.empty()) return g;
  const element_t<S> anchor = power(ctx, x, certified);
  for (Exponent d : divisors) {
    if (g % d != 0) continue;
    if (ctx.equal(ctx.multiply(anchor, power(ctx, x, g / d)), anchor)) {
      g /= d;
      if (stripped) stripped->push_back(d);
    }
  }
  return g;
}

/// Probabilistic cycle length. The output is always a positive multiple of
/// L_x; it equals L_x unless some cofactor survives stripping.
template <Semigroup S>
CycleLengthResult<MonicoTrace> monico_cycle_length(Context<S>& ctx, const element_t<S>& x,
                                                   const MonicoOptions& opts = {}) {
  if (opts.divisor_bound < 2) throw std::domain_error("monico_cycle_length: divisor bound must be >= 2");
  const std::uint64_t before = ctx.multiplications();
  MonicoTrace trace;
  trace.divisor_bound = opts.divisor_bound;
  Exponent n = opts.bound.value_or(1);
  if (n == 0) throw std::domain_error("monico_cycle_length: bound must be positive");

  for (;; n *= 2) {
    if (n > (Exponent{1} << 60)) throw NotTorsion("monico_cycle_length: no collision below 2^61");
    trace.bounds_tried.push_back(n);
    trace.bound = n;
    trace.m = ceil_sqrt(n);
    trace.prime = next_prime_above(n);
    trace.a1 = trace.b1 = trace.a2 = trace.b2 = std::nullopt;
    trace.duplicate = std::nullopt;
    const Exponent m = trace.m, q = trace.prime;

    // (i, x^{q+im}) for 0 <= i <= m
    const element_t<S> xq = power(ctx, x, q);
    std::vector<CollisionTable::Entry> entries;
    entries.reserve(m + 1);
    entries.push_back({ctx.key(xq), 0});
    {
      const element_t<S> xm = m == 1 ? x : power(ctx, x, m);
      element_t<S> cur = xq;
      for (Exponent i = 1; i <= m; ++i) {
        cur = ctx.multiply(cur, xm);
        entries.push_back({ctx.key(cur), i});
      }
    }
    const CollisionTable table(std::move(entries), q, m, m);
    trace.table_size = table.size();

    // least 0 < b < m with x^{shift+b} in the table; returns (a, b)
    auto least_hit = [&](const element_t<S>& shifted) -> std::optional<std::pair<Exponent, Exponent>> {
      element_t<S> cur = shifted;
      for (Exponent b = 1; b < m; ++b) {
        cur = ctx.multiply(cur, x);
        const auto matches = table.find_matches(ctx.key(cur));
        if (!matches.empty()) return std::pair{matches.front(), b};
      }
      return std::nullopt;
    };

    std::optional<Exponent> g;
    auto fold = [&](u128 v) { g = g ? std::gcd(*g, static_cast<Exponent>(v)) : static_cast<Exponent>(v); };

    if (auto hit = least_hit(xq)) {
      trace.a1 = hit->first;
      trace.b1 = hit->second;
      const __int128 v = static_cast<__int128>(hit->first) * m - static_cast<__int128>(hit->second);
      fold(static_cast<u128>(v < 0 ? -v : v));
      trace.certified_exponent = q + hit->second;
    }
    if (auto hit = least_hit(ctx.multiply(xq, xq))) {
      trace.a2 = hit->first;
      trace.b2 = hit->second;
      const __int128 v = static_cast<__int128>(hit->first) * m - static_cast<__int128>(hit->second) -
                         static_cast<__int128>(q);
      if (v != 0) fold(static_cast<u128>(v < 0 ? -v : v));
      if (!trace.b1) trace.certified_exponent = 2 * q + hit->second;
    }
    if (!trace.b1 || !trace.b2) {
      if (auto dup = table.first_duplicate()) {
        trace.duplicate = dup;
        fold(static_cast<u128>(dup->second - dup->first) * m);
        if (!trace.b1 && !trace.b2) trace.certified_exponent = q + dup->first * m;
      }
    }
    if (!g || *g == 0) continue;

    trace.g = *g;
    const Exponent length = strip_divisors(ctx, x, trace.certified_exponent, *g, opts.divisor_bound,
                                           &trace.divisors_tested, &trace.stripped);
    trace.multiplications = ctx.multiplications() - before;
    return {length, std::move(trace)};
  }
}

// ---------------------------------------------------------------------------
// Banin-Tsaban: gcd/lcm of oracle-produced multiples

/// Some k' <= q^2 + q (q = ceil(sqrt(bound))) with h^{k'} = target, the
/// smallest one found by an inverse-free collision search: baby steps
/// target*h^j (0 <= j < q), giant steps h^{iq} (1 <= i <= q+1). Each
/// candidate iq - j is confirmed with one power.
template <Semigroup S>
std::optional<Exponent> group_dlog_oracle(Context<S>& ctx, const element_t<S>& h, const element_t<S>& target,
                                          Exponent bound) {
  const Exponent q = std::max<Exponent>(1, ceil_sqrt(bound));
  std::vector<CollisionTable::Entry> entries;
  entries.reserve(q);
  element_t<S> cur = target;
  entries.push_back({ctx.key(cur), 0});
  for (Exponent j = 1; j < q; ++j) {
    cur = ctx.multiply(cur, h);
    entries.push_back({ctx.key(cur), j});
  }
  const CollisionTable table(std::move(entries), 0, 1, q - 1);

  const element_t<S> step = q == 1 ? h : power(ctx, h, q);
  element_t<S> giant = step;
  std::optional<Exponent> best;
  for (Exponent i = 1; i <= q + 1; ++i) {
    if (i > 1) giant = ctx.multiply(giant, step);
    if (best && i * q - (q - 1) > *best) break;
    const auto matches = table.find_matches(ctx.key(giant));
    for (auto it = matches.rbegin(); it != matches.rend(); ++it) {
      if (*it >= i * q) continue;
      const Exponent candidate = i * q - *it;
      if (best && candidate >= *best) continue;
      if (ctx.equal(power(ctx, h, candidate), target)) best = candidate;
    }
  }
  return best;
}

struct BaninTsabanOptions {
  Exponent bound = 4;                   // M; doubled on oracle failure
  unsigned inner_rounds = 4;            // r
  std::optional<unsigned> outer_rounds; // s; default ceil(log2 log2 M) + 1
};

struct BaninRound {
  Exponent z = 0;
  std::vector<std::pair<Exponent, Exponent>> pairs;  // (k_i, k_i')
  Exponent g = 0;
  Exponent running_lcm = 0;
};

struct BaninTrace {
  Exponent bound = 0;
  unsigned inner_rounds = 0;
  unsigned outer_rounds = 0;
  std::vector<BaninRound> rounds;
  unsigned restarts = 0;
  std::uint64_t multiplications = 0;
};

inline unsigned default_outer_rounds(Exponent bound) {
  const double lg = std::log2(static_cast<double>(std::max<Exponent>(bound, 2)));
  return static_cast<unsigned>(std::ceil(std::log2(std::max(lg, 1.0)))) + 1;
}

/// Probabilistic cycle length: lcm over s values h = x^z of the gcd of r
/// differences k - log_h(h^k).
template <Semigroup S>
CycleLengthResult<BaninTrace> banin_tsaban_cycle_length(Context<S>& ctx, const element_t<S>& x,
                                                        const BaninTsabanOptions& opts, Rng& rng) {
  if (opts.inner_rounds == 0) throw std::domain_error("banin_tsaban_cycle_length: r must be positive");
  if (opts.outer_rounds && *opts.outer_rounds == 0) throw std::domain_error("banin_tsaban_cycle_length: s must be positive");
  const std::uint64_t before = ctx.multiplications();
  BaninTrace trace;
  trace.inner_rounds = opts.inner_rounds;
  Exponent bound = std::max<Exponent>(opts.bound, 1);

  for (;; bound *= 2, ++trace.restarts) {
    if (bound > (Exponent{1} << 40)) throw NotTorsion("banin_tsaban_cycle_length: bound exceeded 2^40");
    trace.bound = bound;
    trace.outer_rounds = opts.outer_rounds.value_or(default_outer_rounds(bound));
    trace.rounds.clear();
    Exponent length = 1;
    bool failed = false;
    for (unsigned j = 0; j < trace.outer_rounds && !failed; ++j) {
      BaninRound round;
      round.z = uniform_in(rng, std::max<Exponent>(1, bound / 2), bound);
      const element_t<S> h = power(ctx, x, round.z);
      for (unsigned i = 0; i < opts.inner_rounds; ++i) {
        const Exponent k = uniform_in(rng, bound + 1, 2 * bound);
        const auto k_prime = group_dlog_oracle(ctx, h, power(ctx, h, k), bound);
        if (!k_prime) {
          failed = true;
          break;
        }
        round.pairs.emplace_back(k, *k_prime);
        round.g = std::gcd(round.g, k > *k_prime ? k - *k_prime : *k_prime - k);
      }
      if (failed || round.g == 0) {
        failed = true;
        break;
      }
      length = std::lcm(length, round.g);
      round.running_lcm = length;
      trace.rounds.push_back(std::move(round));
    }
    if (failed) continue;
    trace.multiplications = ctx.multiplications() - before;
    return {length, std::move(trace)};
  }
}

}  // namespace semidlog
