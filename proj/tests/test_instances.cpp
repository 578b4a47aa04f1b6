#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"

using namespace semidlog;

TEST_CASE("matmod multiplication", "[instances]") {
  const MatMod m(2, 5);
  const MatMod::element_type a{1, 2, 3, 4}, b{0, 1, 1, 0};
  CHECK(m.multiply(a, b) == MatMod::element_type{2, 1, 4, 3});
  CHECK(m.multiply(a, a) == MatMod::element_type{2, 0, 0, 2});
}

TEST_CASE("boolmat multiplication is the boolean product", "[instances]") {
  const BoolMat b(3);
  const auto a = BoolMat::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = random_element(b, seed), y = random_element(b, seed + 1000);
    const auto xy = b.multiply(x, y);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        bool v = false;
        for (int k = 0; k < 3; ++k) v = v || (((x[i] >> k) & 1) && ((y[k] >> j) & 1));
        REQUIRE(((xy[i] >> j) & 1) == static_cast<std::uint64_t>(v));
      }
  }
  CHECK(b.multiply(a, a) == BoolMat::from_rows({{0, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
}

TEST_CASE("monogenic canonical exponents", "[instances]") {
  const Monogenic m(10, 15);
  CHECK(m.order() == 24);
  CHECK(m.canon(26) == 11);
  CHECK(m.canon(24) == 24);
  CHECK(m.canon(25) == 10);
  CHECK(m.multiply(5, 6) == 11);
  CHECK_THROWS_AS(m.multiply(0, 1), std::domain_error);
}

TEST_CASE("constructors validate", "[instances]") {
  CHECK_THROWS_AS(ZMod(0), std::domain_error);
  CHECK_THROWS_AS(BoolMat(65), std::domain_error);
  CHECK_THROWS_AS(Transformation(256), std::domain_error);
  CHECK_THROWS_AS(Monogenic(0, 3), std::domain_error);
  CHECK_THROWS_AS(MatMod(0, 3), std::domain_error);
}

TEST_CASE("random_element is deterministic", "[instances]") {
  CHECK(random_element(ZMod(100), 7) == random_element(ZMod(100), 7));
  CHECK(random_element(MatMod(2, 5), 42) == random_element(MatMod(2, 5), 42));
  CHECK(random_element(Transformation(7), 1) == random_element(Transformation(7), 1));
  std::set<MatMod::element_type> distinct;
  for (std::uint64_t seed = 0; seed < 100; ++seed) distinct.insert(random_element(MatMod(3, 7), seed));
  CHECK(distinct.size() >= 99);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    REQUIRE(random_element(ZMod(100), seed) < 100);
    const auto e = random_element(Monogenic(3, 4), seed);
    REQUIRE((e >= 1 && e <= 6));
  }
}

TEST_CASE("oracle cycle structures", "[instances]") {
  CHECK(oracle::cycle_by_map(ZMod(100), std::uint64_t{2}) == CycleStructure{2, 20});
  CHECK(oracle::cycle_by_map(Transformation(4), Transformation::from_one_indexed({2, 1, 1, 3})) == CycleStructure{2, 2});
  CHECK(oracle::cycle_by_map(Monogenic(5, 12), Exponent{1}) == CycleStructure{5, 12});
}
