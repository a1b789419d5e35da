#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multiarr/builtins.hpp"
#include "multiarr/lattice.hpp"
#include "multiarr/structure.hpp"

#include "oracles.hpp"

using namespace multiarr;
using oracle::plane;

TEST_CASE("locally A2 detection") {
  CHECK(is_locally_A2(builtin("A3")->arrangement));
  CHECK(is_locally_A2(builtin("D4")->arrangement));
  const Arrangement four(2, {plane({1, 0}), plane({0, 1}), plane({1, 1}), plane({1, -1})});
  CHECK_FALSE(is_locally_A2(four));
  CHECK_THROWS_AS(find_positive_system(four), std::invalid_argument);
}

TEST_CASE("positive systems") {
  const Arrangement a2 = builtin("A2")->arrangement;
  CHECK(is_positive_system(a2));
  const auto triples = positive_triples(a2);
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].sum == 2);

  // x, y, x-y: x = y + (x-y), so the identity already works.
  const Arrangement b(2, {plane({1, 0}), plane({0, 1}), plane({1, -1})});
  CHECK(is_positive_system(b));

  // Rescaled roots of A3 recover a positive system.
  const Arrangement a3 = builtin("A3")->arrangement;
  PositiveSystem scramble{{2, -1, 3, Rational(1, 2), -5, 7}};
  const Arrangement scrambled = scramble.apply(a3);
  CHECK_FALSE(is_positive_system(scrambled));
  const auto ps = find_positive_system(scrambled);
  REQUIRE(ps);
  CHECK(is_positive_system(ps->apply(scrambled)));
}

TEST_CASE("arrangements without a positive system") {
  const Arrangement a = builtin("remark-2.3")->arrangement;
  REQUIRE(is_locally_A2(a));
  CHECK_FALSE(find_positive_system(a).has_value());
  CHECK(first_failing_triple(a).has_value());
}

TEST_CASE("condition (*) and (1-ii)") {
  const Arrangement a2 = builtin("A2")->arrangement;
  const auto id = PositiveSystem::identity(3);
  CHECK_FALSE(condition_star(a2, id, {2, 2, 1}));
  CHECK(condition_star(a2, id, {2, 1, 1}));
  CHECK(condition_star(a2, id, {4, 4, 4}));
  CHECK_FALSE(condition_1ii(a2, id, {0, 0, 1}));
  CHECK(condition_1ii(a2, id, {1, 0, 1}));
  CHECK_THROWS_AS(condition_1ii(a2, id, {2, 0, 1}), std::invalid_argument);
}

TEST_CASE("extension levels") {
  CHECK(extension_levels(0).empty());
  CHECK(extension_levels(1) == std::vector<long>{0});
  CHECK(extension_levels(2) == std::vector<long>{0, 1});
  CHECK(extension_levels(4) == std::vector<long>{-1, 0, 1, 2});
  CHECK(extension_levels(5) == std::vector<long>{-2, -1, 0, 1, 2});
  for (int m = 0; m < 12; ++m) CHECK(extension_levels(m).size() == static_cast<size_t>(m));
}

TEST_CASE("extensions") {
  const Arrangement a2 = builtin("A2")->arrangement;
  const auto id = PositiveSystem::identity(3);
  const Arrangement e = extend(a2, id, {2, 2, 2});
  CHECK(e.size() == 7);
  CHECK(e.dim() == 3);
  CHECK(e[e.size() - 1].normal == RatVector{0, 0, 1});
  CHECK(char_poly(e).poly == UniPoly::from_integer_roots(std::vector<long>{1, 3, 3}));
  const Arrangement d = decone_extension(a2, id, {2, 2, 2});
  CHECK(d.size() == 6);
  CHECK(cone(d) == e);
  CHECK(decone(e, e.size() - 1) == d);
}

TEST_CASE("extension sizes and Ziegler round trip on random input") {
  std::mt19937 gen(8);
  for (int it = 0; it < 40; ++it) {
    const Arrangement a = oracle::random_arrangement(gen, 2 + gen() % 2, 1 + gen() % 5, 3, 0);
    std::vector<int> m;
    long total = 0;
    for (size_t i = 0; i < a.size(); ++i) total += m.emplace_back(1 + static_cast<int>(gen() % 5));
    const Arrangement e = extend(a, PositiveSystem::identity(a.size()), m);
    CHECK(static_cast<long>(e.size()) == total + 1);
    const auto back = ziegler_restrict(e, e.size() - 1);
    CHECK(back.base == a);
    CHECK(back.mult == m);
  }
}
