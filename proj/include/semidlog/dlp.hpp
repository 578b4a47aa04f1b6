#pragma once

// Discrete logarithms to a torsion base x. Everything goes through the
// cyclic group G_x = {x^s, ..., x^{s+L-1}} sitting inside <x>:
//   t = ceil(s/L), identity x^{tL}, generator x' = x^{tL+1},
//   y in G_x  <=>  y * x^L = y.
// A log found in G_x is pulled back to <x> by two monotone binary searches.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "semidlog/core.hpp"
#include "semidlog/cycle.hpp"
#include "semidlog/number_theory.hpp"

namespace semidlog {

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Semigroup S>
struct GroupView {
  element_t<S> base;
  CycleStructure cycle;
  Exponent t = 1;
  element_t<S> generator;  // x^{tL+1}
  element_t<S> identity;   // x^{tL}
  element_t<S> period;     // x^{L}, used by the membership test

  Exponent generator_exponent() const noexcept { return t * cycle.length + 1; }
};

template <Semigroup S>
GroupView<S> make_group_view(Context<S>& ctx, const element_t<S>& x, const CycleStructure& cycle) {
  if (cycle.start == 0 || cycle.length == 0) throw std::domain_error("make_group_view: invalid cycle structure");
  const Exponent t = ceil_div(cycle.start, cycle.length);
  element_t<S> period = power(ctx, x, cycle.length);
  element_t<S> identity = t == 1 ? period : power(ctx, period, t);
  element_t<S> generator = ctx.multiply(identity, x);
  return GroupView<S>{x, cycle, t, std::move(generator), std::move(identity), std::move(period)};
}

/// One multiplication and one comparison.
template <Semigroup S>
bool in_group(Context<S>& ctx, const GroupView<S>& gv, const element_t<S>& y) {
  return ctx.equal(ctx.multiply(y, gv.period), y);
}

/// Inverse of x^n in G_x: x^{vL - n} with v minimal such that vL >= s + n.
template <Semigroup S>
element_t<S> inverse_in_group(Context<S>& ctx, const GroupView<S>& gv, Exponent n) {
  const auto& [s, L] = gv.cycle;
  if (n < s) throw std::domain_error("inverse_in_group: x^n is below the cycle start");
  const Exponent v = ceil_div(s + n, L);
  return power(ctx, gv.base, v * L - n);
}

/// Minimal m in [0, n) with g^m = target, for g of order dividing n.
/// Inverse-free: baby table target*g^j (0 <= j <= q), giant steps g^{iq}
/// (1 <= i <= q+1), q = ceil(sqrt(n)); a hit g^{iq} = target*g^j gives
/// m = (iq - j) mod n. All giant steps are scanned so the least m wins.
template <Semigroup S>
Exponent bsgs_group_dlog(Context<S>& ctx, const element_t<S>& g, const element_t<S>& target, Exponent n) {
  if (n == 0) throw std::domain_error("bsgs_group_dlog: order must be positive");
  const Exponent q = ceil_sqrt(n);
  std::vector<CollisionTable::Entry> entries;
  entries.reserve(q + 1);
  element_t<S> cur = target;
  entries.push_back({ctx.key(cur), 0});
  for (Exponent j = 1; j <= q; ++j) {
    cur = ctx.multiply(cur, g);
    entries.push_back({ctx.key(cur), j});
  }
  const CollisionTable table(std::move(entries), 0, 1, q);

  const element_t<S> step = q == 1 ? g : power(ctx, g, q);
  element_t<S> giant = step;
  std::optional<Exponent> best;
  for (Exponent i = 1; i <= q + 1; ++i) {
    if (i > 1) giant = ctx.multiply(giant, step);
    for (Exponent j : table.find_matches(ctx.key(giant))) {
      const Exponent m = (i * q - j) % n;
      if (!best || m < *best) best = m;
    }
  }
  if (!best) throw NoSolution("bsgs_group_dlog: target not in subgroup");
  return *best;
}

// ---------------------------------------------------------------------------
// Solution sets

struct Unique {
  Exponent m;
  friend bool operator==(const Unique&, const Unique&) = default;
};

struct Progression {
  Exponent first;   // m0 in [s, s+L)
  Exponent period;  // L
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// All m >= 1 with x^m = y: a single m below the cycle start, or
/// m0 + k*L for every k >= 0.
using DlogSolution = std::variant<Unique, Progression>;

inline bool contains(const DlogSolution& sol, Exponent m) {
  if (const auto* u = std::get_if<Unique>(&sol)) return u->m == m;
  const auto& p = std::get<Progression>(sol);
  return m >= p.first && (m - p.first) % p.period == 0;
}

/// Smallest member of the solution set.
inline Exponent representative(const DlogSolution& sol) {
  return std::visit([](const auto& v) -> Exponent {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Unique>) return v.m;
    else return v.first;
  }, sol);
}

inline DlogSolution solution_set(Exponent m, const CycleStructure& cycle) {
  if (m == 0) throw std::domain_error("solution_set: exponent must be positive");
  if (m < cycle.start) return Unique{m};
  return Progression{cycle.start + (m - cycle.start) % cycle.length, cycle.length};
}

struct DlogTrace {
  Exponent b = 0;        // minimal shift with y * x^{bL} in G_x
  Exponent m_group = 0;  // log of y * x^{bL} to base x', in [0, L)
  Exponent c = 0;        // maximal c with x^{(tL+1)m' - cL} in G_x
  Exponent raw = 0;      // m'(tL+1) - (b+c)L
};

namespace detail {

// Minimal b in [0, t] with y * x^{bL} in G_x; returns that product too.
template <Semigroup S>
std::pair<Exponent, element_t<S>> shift_into_group(Context<S>& ctx, const GroupView<S>& gv, const element_t<S>& y) {
  const Exponent L = gv.cycle.length;
  auto shifted = [&](Exponent b) { return b == 0 ? y : ctx.multiply(y, power(ctx, gv.base, b * L)); };
  element_t<S> at_zero = y;
  if (in_group(ctx, gv, at_zero)) return {0, std::move(at_zero)};
  element_t<S> best = shifted(gv.t);
  if (!in_group(ctx, gv, best)) throw NoSolution("semigroup dlog: y * x^{tL} is not in G_x");
  Exponent lo = 0, hi = gv.t;  // lo fails, hi holds
  while (hi - lo > 1) {
    const Exponent mid = lo + (hi - lo) / 2;
    element_t<S> probe = shifted(mid);
    if (in_group(ctx, gv, probe)) {
      hi = mid;
      best = std::move(probe);
    } else {
      lo = mid;
    }
  }
  return {hi, std::move(best)};
}

// Pull m' (log to base x' in G_x) back to an exponent of x: find the maximal
// c with x^{(tL+1)m' - cL} in G_x, then subtract (b+c)L. m' = 0 is replaced
// by L so every exponent stays positive.
template <Semigroup S>
DlogSolution lift_group_log(Context<S>& ctx, const GroupView<S>& gv, const element_t<S>& y, DlogTrace& trace) {
  const auto& [s, L] = gv.cycle;
  const Exponent m_prime = trace.m_group == 0 ? L : trace.m_group;
  const Exponent e = gv.generator_exponent() * m_prime;
  auto holds = [&](Exponent c) {
    if (c * L >= e) return false;
    return in_group(ctx, gv, power(ctx, gv.base, e - c * L));
  };
  Exponent lo = 0, hi = gv.cycle.order() + 2;  // lo holds, hi fails
  while (hi - lo > 1) {
    const Exponent mid = lo + (hi - lo) / 2;
    if (holds(mid)) lo = mid;
    else hi = mid;
  }
  trace.c = lo;
  const Exponent shift = (trace.b + trace.c) * L;
  if (shift >= e) throw NoSolution("semigroup dlog: no positive exponent reproduces y");
  trace.raw = e - shift;
  if (!ctx.equal(power(ctx, gv.base, trace.raw), y)) throw NoSolution("semigroup dlog: y is not a power of x");
  return solution_set(trace.raw, gv.cycle);
}

}  // namespace detail

template <class Trace>
struct DlogResult {
  DlogSolution solution;
  Trace trace;
};

/// Every m with x^m = y, given the exact cycle structure of x.
/// Throws NoSolution when y is not in <x>.
template <Semigroup S>
DlogResult<DlogTrace> semigroup_dlog(Context<S>& ctx, const element_t<S>& x, const element_t<S>& y,
                                     const CycleStructure& cycle) {
  const GroupView<S> gv = make_group_view(ctx, x, cycle);
  DlogTrace trace;
  auto [b, shifted] = detail::shift_into_group(ctx, gv, y);
  trace.b = b;
  trace.m_group = bsgs_group_dlog(ctx, gv.generator, shifted, cycle.length);
  DlogSolution sol = detail::lift_group_log(ctx, gv, y, trace);
  return {sol, trace};
}

// ---------------------------------------------------------------------------
// Pohlig-Hellman in G_x

struct PohligHellmanPrime {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  Key sub_generator;  // x_i' = x'^{L / p^e}
  Key sub_target;     // y_i' = y'^{L / p^e}
  Key gamma;          // x_i'^{p^{e-1}}, order p
  Key inverse;        // z_i = x_i'^{-1}
  std::vector<Exponent> digits;    // d_k
  std::vector<Exponent> partials;  // n_1 .. n_e
  Exponent residue = 0;            // m_i mod p^e
};

struct PohligHellmanTrace {
  DlogTrace reduction;
  std::vector<PohligHellmanPrime> primes;
};

/// Same contract as semigroup_dlog; the log in G_x is assembled prime by
/// prime from `fact`, which must factor L_x exactly.
template <Semigroup S>
DlogResult<PohligHellmanTrace> pohlig_hellman_dlog(Context<S>& ctx, const element_t<S>& x, const element_t<S>& y,
                                                   const CycleStructure& cycle, const Factorization& fact) {
  if (expand(fact) != cycle.length) throw std::domain_error("pohlig_hellman_dlog: factorization does not match L_x");
  const GroupView<S> gv = make_group_view(ctx, x, cycle);
  const Exponent L = cycle.length;
  PohligHellmanTrace trace;
  auto [b, shifted] = detail::shift_into_group(ctx, gv, y);
  trace.reduction.b = b;

  std::vector<Congruence> congruences;
  for (const auto& [p, e] : fact) {
    PohligHellmanPrime rec;
    rec.prime = p;
    rec.exponent = e;
    Exponent prime_power = 1;
    for (unsigned i = 0; i < e; ++i) prime_power *= p;
    const Exponent top = prime_power / p;  // p^{e-1}
    const Exponent cofactor = L / prime_power;

    const element_t<S> xi = cofactor == 1 ? gv.generator : power(ctx, gv.generator, cofactor);
    const element_t<S> yi = cofactor == 1 ? shifted : power(ctx, shifted, cofactor);
    const element_t<S> gamma = top == 1 ? xi : power(ctx, xi, top);
    const element_t<S> zi = inverse_in_group(ctx, gv, gv.generator_exponent() * cofactor);
    rec.sub_generator = ctx.key(xi);
    rec.sub_target = ctx.key(yi);
    rec.gamma = ctx.key(gamma);
    rec.inverse = ctx.key(zi);

    Exponent n = 0, pk = 1, lift = top;
    for (unsigned k = 0; k < e; ++k) {
      // z_i^0 does not exist; the factor is simply left out while n = 0.
      const element_t<S> stripped = n == 0 ? yi : ctx.multiply(yi, power(ctx, zi, n));
      const element_t<S> yk = lift == 1 ? stripped : power(ctx, stripped, lift);
      const Exponent d = bsgs_group_dlog(ctx, gamma, yk, p);
      rec.digits.push_back(d);
      n += pk * d;
      rec.partials.push_back(n);
      pk *= p;
      lift /= p;
    }
    rec.residue = n;
    congruences.push_back({n, prime_power});
    trace.primes.push_back(std::move(rec));
  }
  trace.reduction.m_group = crt_combine(congruences).residue;
  DlogSolution sol = detail::lift_group_log(ctx, gv, y, trace.reduction);
  return {sol, std::move(trace)};
}

}  // namespace semidlog
