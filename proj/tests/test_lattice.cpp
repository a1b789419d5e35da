#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multiarr/builtins.hpp"
#include "multiarr/lattice.hpp"

#include "oracles.hpp"

using namespace multiarr;
using oracle::plane;

namespace {

UniPoly roots(std::vector<long> r) { return UniPoly::from_integer_roots(r); }

}  // namespace

TEST_CASE("known characteristic polynomials") {
  CHECK(char_poly(builtin("boolean3")->arrangement).poly == roots({1, 1, 1}));
  CHECK(char_poly(builtin("A3")->arrangement).poly == roots({1, 2, 3}));
  CHECK(char_poly(builtin("shi-A2-cone")->arrangement).poly == roots({1, 3, 3}));
  CHECK(char_poly(builtin("D4")->arrangement).poly == roots({1, 3, 3, 5}));
  // Four generic lines in the plane: t^2 - 4t + 6.
  const Arrangement lines(2, {plane({1, 0}), plane({0, 1}), plane({1, 1}, 1), plane({1, -1}, 3)});
  CHECK(char_poly(lines).poly == UniPoly({Rational(6), Rational(-4), Rational(1)}));
  CHECK(char_poly(Arrangement(3, {})).poly == UniPoly({0, 0, 0, Rational(1)}));
}

TEST_CASE("Mobius values on the braid arrangement") {
  const auto poset = build_poset(builtin("A3")->arrangement);
  CHECK(poset.flats().size() == 1 + 6 + 7 + 1);
  CHECK(poset.flats()[0].mobius == 1);
  for (size_t i : poset.of_codim(1)) CHECK(poset.flats()[i].mobius == -1);
  for (size_t i : poset.of_codim(2)) {
    const auto& f = poset.flats()[i];
    CHECK(f.mobius == (f.flat.indices.size() == 3 ? 2 : 1));
  }
  CHECK(poset.flats().back().mobius == -6);
  CHECK(poset.max_codim() == 3);
  size_t covers = 0;
  for (const auto& c : poset.covers()) covers += c.size();
  CHECK(covers == 6 + 4 * 3 + 3 * 2 + 7);
}

TEST_CASE("poset chi, subset expansion and point counts agree") {
  std::mt19937 gen(17);
  for (int it = 0; it < 40; ++it) {
    const size_t dim = 2 + gen() % 2;
    const Arrangement a = oracle::random_arrangement(gen, dim, 1 + gen() % (dim == 2 ? 8 : 6), 2, it % 2 ? 3 : 0);
    const UniPoly chi = char_poly(a).poly;
    CHECK(chi == whitney_char_poly(a).poly);
    for (long p : {101L, 103L, 107L, 109L}) {
      if (dim == 3 && p > 103) break;
      CHECK(chi.evaluate(Rational(p)) == oracle::point_count(a, p));
    }
  }
}

TEST_CASE("parallel affine lines never meet") {
  const Arrangement a(2, {plane({1, 0}), plane({1, 0}, 1), plane({1, 0}, 2)});
  CHECK(char_poly(a).poly == UniPoly({0, Rational(-3), Rational(1)}));
  CHECK(build_poset(a).max_codim() == 1);
}

TEST_CASE("Terao factorization check") {
  const CharPoly chi = char_poly(builtin("A3")->arrangement);
  const std::vector<long> good{1, 2, 3}, bad{1, 1, 4};
  CHECK(terao_check(chi, good));
  CHECK_FALSE(terao_check(chi, bad));
}

TEST_CASE("subset expansion size guard") {
  std::vector<Hyperplane> hs;
  for (long k = 0; k < 21; ++k) hs.push_back(plane({1}, k));
  CHECK_THROWS_AS(whitney_char_poly(Arrangement(1, hs)), std::invalid_argument);
}
