#pragma once

// Stable JSON shapes for results and traces. Keys are emitted as lowercase
// hex of the canonical encoding.

#include <string>

#include <json.hpp>

#include "semidlog/cycle.hpp"
#include "semidlog/dlp.hpp"
#include "semidlog/number_theory.hpp"

namespace semidlog {

inline std::string to_hex(const Key& key) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

namespace detail {
template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}
}  // namespace detail

inline void to_json(nlohmann::json& j, const CycleStructure& c) {
  j = {{"s", c.start}, {"L", c.length}, {"N", c.order()}};
}

inline void to_json(nlohmann::json& j, const DeterministicRound& r) {
  j = {{"bound", r.base}, {"q", r.stride}, {"table_size", r.table_size}, {"baby_hit", detail::optional_json(r.baby_hit)}};
  if (r.giant_hit) j["giant_hit"] = {{"i", r.giant_hit->first}, {"j", r.giant_hit->second}};
  else j["giant_hit"] = nullptr;
}

inline void to_json(nlohmann::json& j, const DeterministicTrace& t) {
  j = {{"rounds", t.rounds},
       {"confirmation", t.confirmation ? nlohmann::json(*t.confirmation) : nlohmann::json(nullptr)},
       {"multiplications", t.multiplications},
       {"peak_table_size", t.peak_table_size}};
}

inline void to_json(nlohmann::json& j, const MonicoTrace& t) {
  j = {{"bound", t.bound},
       {"m", t.m},
       {"q", t.prime},
       {"a1", detail::optional_json(t.a1)},
       {"b1", detail::optional_json(t.b1)},
       {"a2", detail::optional_json(t.a2)},
       {"b2", detail::optional_json(t.b2)},
       {"g", t.g},
       {"certified_exponent", t.certified_exponent},
       {"B", t.divisor_bound},
       {"divisors_tested", t.divisors_tested},
       {"stripped", t.stripped},
       {"bounds_tried", t.bounds_tried},
       {"table_size", t.table_size},
       {"multiplications", t.multiplications}};
  if (t.duplicate) j["duplicate"] = {{"i1", t.duplicate->first}, {"i2", t.duplicate->second}};
  else j["duplicate"] = nullptr;
}

inline void to_json(nlohmann::json& j, const BaninRound& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [k, kp] : r.pairs) pairs.push_back({{"k", k}, {"k_prime", kp}});
  j = {{"z", r.z}, {"pairs", std::move(pairs)}, {"g", r.g}, {"lcm", r.running_lcm}};
}

inline void to_json(nlohmann::json& j, const BaninTrace& t) {
  j = {{"bound", t.bound},
       {"r", t.inner_rounds},
       {"s", t.outer_rounds},
       {"rounds", t.rounds},
       {"restarts", t.restarts},
       {"multiplications", t.multiplications}};
}

inline void to_json(nlohmann::json& j, const DlogSolution& sol) {
  if (const auto* u = std::get_if<Unique>(&sol)) {
    j = {{"kind", "unique"}, {"m", u->m}};
  } else {
    const auto& p = std::get<Progression>(sol);
    j = {{"kind", "progression"}, {"m0", p.first}, {"period", p.period}};
  }
}

inline void to_json(nlohmann::json& j, const DlogTrace& t) {
  j = {{"b", t.b}, {"m_prime", t.m_group}, {"c", t.c}, {"raw_m", t.raw}};
}

inline void to_json(nlohmann::json& j, const PohligHellmanPrime& p) {
  j = {{"p", p.prime},
       {"e", p.exponent},
       {"x_i", to_hex(p.sub_generator)},
       {"y_i", to_hex(p.sub_target)},
       {"gamma", to_hex(p.gamma)},
       {"z_i", to_hex(p.inverse)},
       {"digits", p.digits},
       {"partials", p.partials},
       {"m_i", p.residue}};
}

inline void to_json(nlohmann::json& j, const PohligHellmanTrace& t) {
  j = {{"reduction", t.reduction}, {"primes", t.primes}};
}

inline void to_json(nlohmann::json& j, const PrimePower& p) { j = {{"p", p.prime}, {"e", p.exponent}}; }

}  // namespace semidlog
