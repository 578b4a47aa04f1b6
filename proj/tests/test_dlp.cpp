#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace semidlog;

TEST_CASE("group view", "[dlp]") {
  Context<ZMod> ctx(ZMod(100));
  const auto gv = make_group_view(ctx, 2, CycleStructure{2, 20});
  CHECK(gv.t == 1);
  CHECK(gv.identity == 76);
  CHECK(gv.generator == 52);
  CHECK(oracle::mod_pow_naive(2, 20, 100) == 76);

  for (Exponent L : {1, 4, 9}) {
    Context<Monogenic> mono(Monogenic(1, L));
    const auto g = make_group_view(mono, 1, CycleStructure{1, L});
    CHECK(g.identity == L);
    CHECK(g.generator == 1);
  }
  Context<Monogenic> mono(Monogenic(10, 15));
  const auto g = make_group_view(mono, 1, CycleStructure{10, 15});
  CHECK(g.t == 1);
  CHECK(g.identity == 15);
  CHECK(g.generator == 16);
}

TEST_CASE("group membership", "[dlp]") {
  Context<ZMod> ctx(ZMod(100));
  const auto gv = make_group_view(ctx, 2, CycleStructure{2, 20});
  CHECK(in_group(ctx, gv, 68));
  CHECK(in_group(ctx, gv, gv.identity));
  CHECK(!in_group(ctx, gv, 2));
  Context<Monogenic> mono(Monogenic(10, 15));
  const auto g = make_group_view(mono, 1, CycleStructure{10, 15});
  CHECK(!in_group(mono, g, 5));
  for (Exponent e = 1; e <= 24; ++e) REQUIRE(in_group(mono, g, e) == (e >= 10));
}

TEST_CASE("inverses", "[dlp]") {
  Context<ZMod> ctx(ZMod(100));
  const auto gv = make_group_view(ctx, 2, CycleStructure{2, 20});
  CHECK(inverse_in_group(ctx, gv, 3) == 72);
  CHECK(ctx.multiply(8, 72) == 76);
  CHECK(inverse_in_group(ctx, gv, 20) == gv.identity);
  CHECK_THROWS_AS(inverse_in_group(ctx, gv, 1), std::domain_error);

  Context<Monogenic> mono(Monogenic(10, 15));
  const auto g = make_group_view(mono, 1, CycleStructure{10, 15});
  CHECK(inverse_in_group(mono, g, 16) == 14);
  CHECK(mono.multiply(16, 14) == g.identity);
}

TEST_CASE("bsgs_group_dlog", "[dlp]") {
  Context<ZMod> ctx(ZMod(100));
  CHECK(bsgs_group_dlog(ctx, 52, 68, 20) == 15);
  CHECK(oracle::mod_pow_naive(52, 15, 100) == 68);
  CHECK(bsgs_group_dlog(ctx, 52, 76, 20) == 0);
  CHECK_THROWS_AS(bsgs_group_dlog(ctx, 76, 52, 20), NoSolution);

  Context<Monogenic> mono(Monogenic(2, 20));
  const auto gv = make_group_view(mono, 1, CycleStructure{2, 20});
  CHECK(bsgs_group_dlog(mono, gv.generator, power(mono, gv.generator, 7), 20) == 7);
}

TEST_CASE("semigroup_dlog", "[dlp]") {
  Context<ZMod> ctx(ZMod(100));
  const CycleStructure c{2, 20};
  const auto r = semigroup_dlog(ctx, 2, 68, c);
  CHECK(r.solution == DlogSolution{Progression{15, 20}});
  CHECK(r.trace.b == 0);
  CHECK(r.trace.m_group == 15);
  CHECK(r.trace.c == 15);
  CHECK(r.trace.raw == 15);
  CHECK(oracle::mod_pow_naive(2, 35, 100) == 68);

  CHECK(semigroup_dlog(ctx, 2, 2, c).solution == DlogSolution{Unique{1}});
  CHECK_THROWS_AS(semigroup_dlog(ctx, 2, 3, c), NoSolution);

  Context<Monogenic> mono(Monogenic(10, 15));
  CHECK(semigroup_dlog(mono, 1, 5, CycleStructure{10, 15}).solution == DlogSolution{Unique{5}});
}

TEST_CASE("solution sets", "[dlp]") {
  const CycleStructure c{2, 20};
  CHECK(solution_set(15, c) == DlogSolution{Progression{15, 20}});
  CHECK(solution_set(1, c) == DlogSolution{Unique{1}});
  CHECK(solution_set(55, c) == DlogSolution{Progression{15, 20}});
  const DlogSolution p = Progression{15, 20};
  CHECK(contains(p, 35));
  CHECK(!contains(p, 5));
  CHECK(!contains(p, 36));
  CHECK(representative(p) == 15);
}

TEST_CASE("pohlig_hellman_dlog", "[dlp]") {
  Context<ZMod> ctx(ZMod(100));
  const CycleStructure c{2, 20};
  const auto r = pohlig_hellman_dlog(ctx, 2, 68, c, factor_integer(20));
  CHECK(r.solution == DlogSolution{Progression{15, 20}});
  REQUIRE(r.trace.primes.size() == 2);
  CHECK(r.trace.primes[0].prime == 2);
  CHECK(r.trace.primes[0].residue == 3);
  CHECK(r.trace.primes[1].prime == 5);
  CHECK(r.trace.primes[1].residue == 0);
  CHECK_THROWS_AS(pohlig_hellman_dlog(ctx, 2, 68, c, factor_integer(10)), std::domain_error);

  Context<Monogenic> prime_cycle(Monogenic(4, 13));
  const auto y = power(prime_cycle, 1, 4);
  CHECK(pohlig_hellman_dlog(prime_cycle, 1, y, {4, 13}, factor_integer(13)).solution ==
        semigroup_dlog(prime_cycle, 1, y, {4, 13}).solution);

  Context<Monogenic> trivial(Monogenic(6, 1));
  for (Exponent m = 1; m <= 6; ++m) {
    const auto ph = pohlig_hellman_dlog(trivial, 1, m, {6, 1}, factor_integer(1)).solution;
    CHECK(ph == semigroup_dlog(trivial, 1, m, {6, 1}).solution);
    CHECK(contains(ph, m));
  }
}

TEST_CASE("dlog round trip against enumeration", "[dlp]") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Exponent s = uniform_in(rng, 1, 60), L = uniform_in(rng, 1, 60);
    const Monogenic sg(s, L);
    Context<Monogenic> ctx(sg);
    const Exponent m = uniform_in(rng, 1, 3 * sg.order());
    const auto y = power(ctx, 1, m);
    const auto sol = semigroup_dlog(ctx, 1, y, {s, L}).solution;
    const auto logs = oracle::all_logs(sg, Exponent{1}, y, 3 * sg.order());
    for (Exponent k = 1; k <= 3 * sg.order(); ++k)
      REQUIRE(contains(sol, k) == std::binary_search(logs.begin(), logs.end(), k));
  }
}
