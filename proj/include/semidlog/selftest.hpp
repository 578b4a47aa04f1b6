#pragma once

// Built-in property suites run by `semidlog selftest`. Each suite compares an
// algorithm against an independent ground truth; `inject_fault` perturbs the
// ground truth of one suite so the failure path can be exercised.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semidlog/cycle.hpp"
#include "semidlog/dlp.hpp"
#include "semidlog/instances.hpp"

namespace semidlog {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool passed() const noexcept { return failures == 0; }
};

namespace selftest_detail {

struct Recorder {
  SuiteResult result;
  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (ok) return;
    if (result.failures++ == 0) result.first_failure = what;
  }
};

template <Semigroup S>
void cycle_equivalence(Recorder& rec, const S& sg, const element_t<S>& x, bool fault) {
  Context<S> ctx(sg);
  CycleStructure truth = brute_force_cycle(ctx, x);
  if (fault) ++truth.length;
  const CycleStructure got = deterministic_cycle(ctx, x);
  rec.check(got == truth, sg.describe() + ": deterministic cycle differs from brute force");
}

template <Semigroup S>
void dlog_agreement(Recorder& rec, const S& sg, const element_t<S>& x, bool fault) {
  Context<S> ctx(sg);
  const CycleStructure cyc = brute_force_cycle(ctx, x);
  const Factorization fact = factor_integer(cyc.length);
  element_t<S> y = x;
  for (Exponent m = 1; m <= cyc.order(); ++m, y = ctx.multiply(y, x)) {
    const auto reduced = semigroup_dlog(ctx, x, y, cyc).solution;
    auto ph = pohlig_hellman_dlog(ctx, x, y, cyc, fact).solution;
    if (fault && m == 1) ph = Unique{m + 1};
    rec.check(reduced == ph && contains(reduced, m), sg.describe() + ": Pohlig-Hellman and reduction disagree at m=" + std::to_string(m));
  }
}

template <Semigroup S>
void inverse_check(Recorder& rec, const S& sg, const element_t<S>& x, bool fault) {
  Context<S> ctx(sg);
  const CycleStructure cyc = brute_force_cycle(ctx, x);
  const auto gv = make_group_view(ctx, x, cyc);
  for (Exponent n = cyc.start; n <= cyc.order(); ++n) {
    const auto xn = power(ctx, x, n);
    const auto inv = inverse_in_group(ctx, gv, fault ? n + 1 : n);
    rec.check(ctx.equal(ctx.multiply(xn, inv), gv.identity), sg.describe() + ": x^n * inverse != identity at n=" + std::to_string(n));
  }
}

template <Semigroup S>
void periodicity_check(Recorder& rec, const S& sg, const element_t<S>& x, Rng& rng, bool fault) {
  Context<S> ctx(sg);
  const CycleStructure cyc = brute_force_cycle(ctx, x);
  for (int trial = 0; trial < 200; ++trial) {
    const Exponent a = uniform_in(rng, cyc.start, cyc.start + 4 * cyc.length);
    const Exponent b = uniform_in(rng, cyc.start, cyc.start + 4 * cyc.length);
    const bool equal = ctx.equal(power(ctx, x, a), power(ctx, x, b));
    const bool congruent = (a % cyc.length == b % cyc.length) != (fault && trial == 0);
    rec.check(equal == congruent, sg.describe() + ": x^a = x^b does not match a = b mod L");
  }
}

}  // namespace selftest_detail

inline std::vector<std::string> selftest_suite_names() {
  return {"oracle-equivalence", "cycle-start-pitfalls", "periodicity", "group-inverse", "pohlig-hellman-agreement"};
}

inline std::vector<SuiteResult> run_selftest(const std::string& inject_fault = "") {
  using namespace selftest_detail;
  std::vector<SuiteResult> out;
  auto suite = [&](const std::string& name, const std::function<void(Recorder&, bool)>& body) {
    Recorder rec;
    rec.result.name = name;
    try {
      body(rec, inject_fault == name);
    } catch (const std::exception& e) {
      rec.check(false, std::string("exception: ") + e.what());
    }
    out.push_back(rec.result);
  };

  suite("oracle-equivalence", [](Recorder& rec, bool fault) {
    for (std::uint64_t n = 1; n <= 128; ++n)
      for (std::uint64_t v = 0; v < n; ++v) cycle_equivalence(rec, ZMod(n), v, fault && n == 1);
    for (std::uint64_t s = 1; s <= 20; ++s)
      for (std::uint64_t L = 1; L <= 20; ++L) cycle_equivalence(rec, Monogenic(s, L), 1, false);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      cycle_equivalence(rec, Transformation(6), random_element(Transformation(6), seed), false);
      cycle_equivalence(rec, MatMod(3, 5), random_element(MatMod(3, 5), seed), false);
      cycle_equivalence(rec, BoolMat(5), random_element(BoolMat(5), seed), false);
    }
  });

  suite("cycle-start-pitfalls", [](Recorder& rec, bool fault) {
    {
      Context<Monogenic> ctx(Monogenic(5, 12));
      rec.check(brute_force_cycle(ctx, 1) == CycleStructure{5, 12}, "monogenic(5,12) generator has s=5, L=12");
      rec.check(power(ctx, 1, 15) != power(ctx, 1, 3) || fault, "x^15 != x^3 although 15 - 3 = L");
      rec.check(!fault, "injected fault");
    }
    {
      Context<Monogenic> ctx(Monogenic(10, 15));
      const auto y = power(ctx, 1, 5);
      rec.check(ctx.multiply(y, power(ctx, 1, 6)) == power(ctx, 1, 26), "y * x^6 = x^26");
      rec.check(power(ctx, 1, 11) == power(ctx, 1, 26), "x^11 = x^26");
      rec.check(y != power(ctx, 1, 20), "x^5 != x^20");
      const auto sol = semigroup_dlog(ctx, 1, y, CycleStructure{10, 15}).solution;
      rec.check(sol == DlogSolution{Unique{5}}, "dlog of x^5 is Unique(5)");
    }
  });

  suite("periodicity", [](Recorder& rec, bool fault) {
    Rng rng(2024);
    periodicity_check(rec, ZMod(100), 2, rng, fault);
    periodicity_check(rec, Monogenic(10, 15), 1, rng, false);
    periodicity_check(rec, Monogenic(37, 24), 1, rng, false);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      periodicity_check(rec, Transformation(7), random_element(Transformation(7), seed), rng, false);
      periodicity_check(rec, MatMod(2, 7), random_element(MatMod(2, 7), seed), rng, false);
    }
  });

  suite("group-inverse", [](Recorder& rec, bool fault) {
    inverse_check(rec, ZMod(100), 2, fault);
    inverse_check(rec, Monogenic(10, 15), 1, false);
    inverse_check(rec, Monogenic(3, 40), 1, false);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      inverse_check(rec, Transformation(7), random_element(Transformation(7), seed), false);
      inverse_check(rec, BoolMat(6), random_element(BoolMat(6), seed), false);
    }
  });

  suite("pohlig-hellman-agreement", [](Recorder& rec, bool fault) {
    dlog_agreement(rec, ZMod(100), 2, fault);
    dlog_agreement(rec, Monogenic(10, 15), 1, false);
    dlog_agreement(rec, Monogenic(7, 72), 1, false);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      dlog_agreement(rec, Transformation(7), random_element(Transformation(7), seed), false);
      dlog_agreement(rec, MatMod(3, 3), random_element(MatMod(3, 3), seed), false);
    }
  });

  return out;
}

}  // namespace semidlog
