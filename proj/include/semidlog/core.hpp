#pragma once

// Core contract shared by every algorithm: the Semigroup concept, a counting
// Context, exponentiation, and sorted collision tables keyed by canonical
// byte strings.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semidlog {

using Exponent = std::uint64_t;

/// Canonical byte encoding of an element. Key equality is element equality.
using Key = std::string;

/// A finite-representable semigroup family. `multiply` must be associative
/// and must throw std::domain_error for elements that do not belong to the
/// instance. No identity element is assumed.
template <class S>
concept Semigroup = std::copy_constructible<S> && requires(const S& s, const typename S::element_type& a) {
  typename S::element_type;
  { s.multiply(a, a) } -> std::same_as<typename S::element_type>;
  { s.key(a) } -> std::same_as<Key>;
  { s.describe() } -> std::convertible_to<std::string>;
  { a == a } -> std::convertible_to<bool>;
};

template <Semigroup S>
using element_t = typename S::element_type;

/// Wraps a semigroup instance and counts multiplications. The counter is the
/// only mutable state; a Context has a single writer.
template <Semigroup S>
class Context {
 public:
  using element_type = element_t<S>;

  explicit Context(S semigroup) : semigroup_(std::move(semigroup)) {}

  const S& semigroup() const noexcept { return semigroup_; }

  element_type multiply(const element_type& a, const element_type& b) {
    element_type out = semigroup_.multiply(a, b);
    ++multiplications_;
    return out;
  }

  Key key(const element_type& a) const { return semigroup_.key(a); }
  bool equal(const element_type& a, const element_type& b) const { return a == b; }

  std::uint64_t multiplications() const noexcept { return multiplications_; }
  void reset_counter() noexcept { multiplications_ = 0; }

 private:
  S semigroup_;
  std::uint64_t multiplications_ = 0;
};

/// Number of multiplications `power` spends on exponent e.
constexpr std::uint64_t power_cost(Exponent e) noexcept {
  return e == 0 ? 0 : static_cast<std::uint64_t>(std::bit_width(e) - 1 + std::popcount(e) - 1);
}

/// x^e by left-to-right square-and-multiply. Uses floor(log2 e) squarings
/// plus popcount(e)-1 multiplications by x.
template <Semigroup S>
element_t<S> power(Context<S>& ctx, const element_t<S>& x, Exponent e) {
  if (e == 0) throw std::domain_error("power: exponent 0 requested; no identity in semigroup");
  element_t<S> acc = x;
  for (int bit = std::bit_width(e) - 2; bit >= 0; --bit) {
    acc = ctx.multiply(acc, acc);
    if ((e >> bit) & 1u) acc = ctx.multiply(acc, x);
  }
  return acc;
}

/// Sorted table of (key, exponent) pairs. Lookup returns every exponent
/// stored under a key, ascending.
class CollisionTable {
 public:
  struct Entry {
    Key key;
    Exponent exponent;
    friend bool operator<(const Entry& a, const Entry& b) {
      return a.key != b.key ? a.key < b.key : a.exponent < b.exponent;
    }
  };

  CollisionTable() = default;
  CollisionTable(std::vector<Entry> entries, Exponent start, Exponent stride, Exponent count)
      : entries_(std::move(entries)), start_(start), stride_(stride), count_(count) {
    std::sort(entries_.begin(), entries_.end());
  }

  std::vector<Exponent> find_matches(const Key& probe) const {
    auto lo = std::lower_bound(entries_.begin(), entries_.end(), probe,
                               [](const Entry& e, const Key& k) { return e.key < k; });
    std::vector<Exponent> out;
    for (; lo != entries_.end() && lo->key == probe; ++lo) out.push_back(lo->exponent);
    return out;
  }

  /// Pair of entries sharing a key with the smallest exponent gap, as
  /// (smaller, larger).
  std::optional<std::pair<Exponent, Exponent>> first_duplicate() const {
    std::optional<std::pair<Exponent, Exponent>> best;
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i].key != entries_[i - 1].key) continue;
      std::pair<Exponent, Exponent> p{entries_[i - 1].exponent, entries_[i].exponent};
      if (!best || p.second - p.first < best->second - best->first) best = p;
    }
    return best;
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Exponent start() const noexcept { return start_; }
  Exponent stride() const noexcept { return stride_; }
  Exponent count() const noexcept { return count_; }

 private:
  std::vector<Entry> entries_;
  Exponent start_ = 0;
  Exponent stride_ = 0;
  Exponent count_ = 0;
};

/// Table of x^{start + k*stride} for k = 0..count. One power() call for the
/// first entry (plus one for x^stride when stride > 1), then `count`
/// multiplications.
template <Semigroup S>
CollisionTable build_power_table(Context<S>& ctx, const element_t<S>& base, Exponent start,
                                 Exponent stride, Exponent count) {
  if (start == 0 || stride == 0) throw std::domain_error("build_power_table: start and stride must be positive");
  std::vector<CollisionTable::Entry> entries;
  entries.reserve(count + 1);
  element_t<S> cur = power(ctx, base, start);
  const element_t<S> step = stride == 1 ? base : power(ctx, base, stride);
  entries.push_back({ctx.key(cur), start});
  for (Exponent k = 1; k <= count; ++k) {
    cur = ctx.multiply(cur, step);
    entries.push_back({ctx.key(cur), start + k * stride});
  }
  return CollisionTable(std::move(entries), start, stride, count);
}

inline std::vector<Exponent> find_matches(const CollisionTable& table, const Key& probe) {
  return table.find_matches(probe);
}

namespace detail {

inline void append_be64(Key& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xffu));
}

}  // namespace detail
}  // namespace semidlog
