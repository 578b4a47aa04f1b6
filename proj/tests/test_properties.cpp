#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace semidlog;

namespace {

template <class S>
void check_associative(const S& sg, std::uint64_t seed) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto a = random_element(sg, seed + 3 * i), b = random_element(sg, seed + 3 * i + 1),
               c = random_element(sg, seed + 3 * i + 2);
    REQUIRE(sg.multiply(sg.multiply(a, b), c) == sg.multiply(a, sg.multiply(b, c)));
  }
}

template <class S>
void check_cycle(const S& sg, const element_t<S>& x) {
  Context<S> ctx(sg);
  const auto truth = oracle::cycle_by_map(sg, x);
  REQUIRE(brute_force_cycle(ctx, x) == truth);
  REQUIRE(deterministic_cycle(ctx, x) == truth);
  REQUIRE(deterministic_cycle(ctx, x, truth.order()) == truth);
  REQUIRE(monico_cycle_length(ctx, x).length % truth.length == 0);
}

template <class S>
void check_periodicity(const S& sg, const element_t<S>& x, Rng& rng) {
  Context<S> ctx(sg);
  const auto c = oracle::cycle_by_map(sg, x);
  for (int i = 0; i < 20; ++i) {
    const Exponent a = uniform_in(rng, c.start, c.start + 3 * c.length);
    const Exponent b = uniform_in(rng, c.start, c.start + 3 * c.length);
    REQUIRE((power(ctx, x, a) == power(ctx, x, b)) == (a % c.length == b % c.length));
  }
  for (Exponent a = 1; a < c.start; ++a) REQUIRE(power(ctx, x, a) != power(ctx, x, a + c.length));
}

template <class S>
void check_dlog(const S& sg, const element_t<S>& x, Rng& rng) {
  Context<S> ctx(sg);
  const auto c = oracle::cycle_by_map(sg, x);
  const Exponent m = uniform_in(rng, 1, 3 * c.order());
  const auto y = oracle::power_naive(sg, x, m);
  const auto sol = semigroup_dlog(ctx, x, y, c).solution;
  REQUIRE(contains(sol, m));
  REQUIRE(oracle::power_naive(sg, x, representative(sol)) == y);
  REQUIRE(pohlig_hellman_dlog(ctx, x, y, c, factor_integer(c.length)).solution == sol);
}

}  // namespace

TEST_CASE("multiplication is associative", "[property]") {
  check_associative(ZMod(997), 1);
  check_associative(MatMod(3, 7), 2);
  check_associative(BoolMat(6), 3);
  check_associative(BoolMat(64), 4);
  check_associative(Transformation(9), 5);
  check_associative(Monogenic(17, 23), 6);
}

TEST_CASE("cycle algorithms agree with the key-map oracle", "[property]") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    check_cycle(ZMod(1 + seed * 7), random_element(ZMod(1 + seed * 7), seed));
    check_cycle(MatMod(2, 11), random_element(MatMod(2, 11), seed));
    check_cycle(BoolMat(7), random_element(BoolMat(7), seed));
    check_cycle(Transformation(12), random_element(Transformation(12), seed));
  }
}

TEST_CASE("x^a = x^b iff a = b mod L beyond the cycle start", "[property]") {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    check_periodicity(ZMod(360), random_element(ZMod(360), seed), rng);
    check_periodicity(Transformation(10), random_element(Transformation(10), seed), rng);
    check_periodicity(MatMod(2, 9), random_element(MatMod(2, 9), seed), rng);
  }
}

TEST_CASE("dlog round trip on random instances", "[property]") {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    check_dlog(ZMod(720), random_element(ZMod(720), seed), rng);
    check_dlog(Transformation(10), random_element(Transformation(10), seed), rng);
    check_dlog(MatMod(3, 3), random_element(MatMod(3, 3), seed), rng);
    check_dlog(BoolMat(6), random_element(BoolMat(6), seed), rng);
  }
}
