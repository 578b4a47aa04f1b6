#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace semidlog;

TEST_CASE("multiply", "[core]") {
  CHECK(ZMod(100).multiply(8, 72) == 76);
  const Transformation t(4);
  const auto a = Transformation::from_one_indexed({2, 1, 1, 3});
  CHECK(t.multiply(a, a) == Transformation::from_one_indexed({1, 2, 2, 1}));
  CHECK(Monogenic(10, 15).multiply(11, 15) == 11);
}

TEST_CASE("power matches repeated multiplication", "[core]") {
  Context<ZMod> ctx(ZMod(100));
  CHECK(power(ctx, 2, 15) == 68);
  CHECK(power(ctx, 37, 1) == 37);
  for (Exponent e = 1; e < 300; ++e) REQUIRE(power(ctx, 3, e) == oracle::mod_pow_naive(3, e, 100));

  Context<Monogenic> mono(Monogenic(5, 12));
  CHECK(power(mono, 1, 15) == 15);
  CHECK(power(mono, 1, 3) == 3);
  CHECK(power(mono, 1, 15) != power(mono, 1, 3));
}

TEST_CASE("power counts multiplications", "[core]") {
  Context<ZMod> ctx(ZMod(1009));
  for (Exponent e : {1ull, 2ull, 3ull, 15ull, 16ull, 1000ull, (1ull << 40) + 12345}) {
    ctx.reset_counter();
    power(ctx, 11, e);
    CHECK(ctx.multiplications() == power_cost(e));
  }
  CHECK(power_cost(15) == 6);
  CHECK(power_cost(16) == 4);
}

TEST_CASE("power rejects exponent zero", "[core]") {
  Context<ZMod> ctx(ZMod(100));
  CHECK_THROWS_AS(power(ctx, 2, 0), std::domain_error);
}

TEST_CASE("canonical keys", "[core]") {
  CHECK(ZMod(100).key(68) == std::string("\0\0\0\0\0\0\0\x44", 8));
  const BoolMat b(2);
  CHECK(b.key(BoolMat::from_rows({{1, 0}, {0, 1}})) == std::string("\x90", 1));
  const Transformation t(4);
  CHECK(t.key(Transformation::from_one_indexed({2, 3, 4, 2})) == std::string("\x02\x03\x04\x02", 4));
}

TEST_CASE("power tables", "[core]") {
  Context<ZMod> ctx(ZMod(100));
  const auto table = build_power_table(ctx, 2, 32, 1, 6);
  REQUIRE(table.size() == 7);
  std::vector<Exponent> exps;
  for (const auto& e : table.entries()) exps.push_back(e.exponent);
  std::sort(exps.begin(), exps.end());
  CHECK(exps == std::vector<Exponent>{32, 33, 34, 35, 36, 37, 38});

  CHECK(find_matches(table, ctx.key(oracle::mod_pow_naive(2, 56, 100))) == std::vector<Exponent>{36});
  CHECK(find_matches(table, ctx.key(3)).empty());

  const auto single = build_power_table(ctx, 2, 5, 1, 0);
  REQUIRE(single.size() == 1);
  CHECK(single.entries().front().exponent == 5);
  CHECK(single.entries().front().key == ctx.key(32));

  Context<Monogenic> mono(Monogenic(5, 12));
  const auto low = build_power_table(mono, 1, 1, 1, 3);
  REQUIRE(low.size() == 4);
  CHECK(!low.first_duplicate());
}

TEST_CASE("duplicate keys are all returned", "[core]") {
  Context<Monogenic> mono(Monogenic(1, 3));
  const auto table = build_power_table(mono, 1, 1, 1, 6);
  CHECK(find_matches(table, mono.key(2)) == std::vector<Exponent>{2, 5});
  const auto dup = table.first_duplicate();
  REQUIRE(dup);
  CHECK(dup->second - dup->first == 3);
}
