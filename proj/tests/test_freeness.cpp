#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multiarr/builtins.hpp"
#include "multiarr/freeness.hpp"

#include "oracles.hpp"

using namespace multiarr;
using oracle::plane;

namespace {

const Arrangement kRank2(2, {plane({1, 0}), plane({0, 1}), plane({1, 1})});

bool recheck(const Multiarrangement& am, const FreenessCertificate& c) {
  const auto& f = std::get<Free>(c.verdict);
  if (!f.saito) return false;
  const std::vector<std::vector<MultiPoly>> m(f.saito->basis.begin(), f.saito->basis.end());
  for (const auto& delta : f.saito->basis)
    if (!oracle::in_module(am, delta)) return false;
  return f.saito->scalar != 0 && oracle::leibniz_det(m) == am.defining_polynomial() * f.saito->scalar;
}

}  // namespace

TEST_CASE("graded dimensions agree with the line-chart oracle") {
  std::mt19937 gen(31);
  for (int it = 0; it < 25; ++it) {
    const size_t dim = 2 + gen() % 2;
    const Arrangement a = oracle::random_arrangement(gen, dim, 2 + gen() % 3, 2, 0);
    std::vector<int> m;
    for (size_t i = 0; i < a.size(); ++i) m.push_back(static_cast<int>(gen() % 4));
    const Multiarrangement am(a, m);
    for (int d = 0; d <= (dim == 2 ? 6 : 4); ++d) CHECK(graded_dim(am, d) == oracle::graded_dim(am, d));
  }
}

TEST_CASE("graded basis elements belong to the module") {
  const Multiarrangement am(kRank2, {2, 1, 3});
  for (int d = 0; d <= 4; ++d) {
    const auto basis = graded_basis(am, d);
    CHECK(basis.size() == graded_dim(am, d));
    for (const auto& delta : basis) {
      CHECK(in_derivation_module(am, delta));
      CHECK(oracle::in_module(am, delta));
    }
  }
}

TEST_CASE("exact division") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly p = (x + y).pow(3) * (x - y * 2);
  CHECK(exact_divide(p, (x + y).pow(2)) == (x + y) * (x - y * 2));
  CHECK_FALSE(exact_divide(p, x).has_value());
  CHECK_FALSE(exact_divide(p, MultiPoly(2)).has_value());
  CHECK(exact_divide(MultiPoly(2), x) == MultiPoly(2));
}

TEST_CASE("free arrangements") {
  const auto a3 = is_free_simple(builtin("A3")->arrangement);
  REQUIRE(a3.is_free());
  CHECK(a3.exponents() == std::vector<int>{1, 2, 3});
  CHECK(recheck(Multiarrangement::simple(builtin("A3")->arrangement), a3));

  const auto b3 = is_free_simple(builtin("boolean3")->arrangement);
  CHECK(b3.exponents() == std::vector<int>{1, 1, 1});

  const auto shi = is_free_simple(builtin("shi-A2-cone")->arrangement);
  CHECK(shi.exponents() == std::vector<int>{1, 3, 3});

  // Non-essential: x(x+y) in three variables.
  const Arrangement ne(3, {plane({1, 0, 0}), plane({1, 1, 0})});
  CHECK(is_free_simple(ne).exponents() == std::vector<int>{0, 1, 1});
  CHECK(is_free_simple(Arrangement(2, {})).exponents() == std::vector<int>{0, 0});
}

TEST_CASE("non-free multiarrangements carry a rechecked Hilbert witness") {
  const Arrangement g = builtin("generic4")->arrangement;
  const auto c = is_free_simple(g);
  REQUIRE(c.is_nonfree());
  CHECK(c.witness_kind() == "HilbertMismatch");
  const auto& w = std::get<HilbertMismatch>(std::get<NonFree>(c.verdict).witness);
  CHECK(w.dims.size() == static_cast<size_t>(w.degree + 1));
  for (int d = 0; d <= w.degree; ++d)
    CHECK(w.dims[d] == static_cast<long>(oracle::graded_dim(Multiarrangement::simple(g), d)));
}

TEST_CASE("cutoff produces an undetermined verdict") {
  const auto c = is_free_multi(Multiarrangement(kRank2, {3, 3, 3}), FreenessOptions{0, 4});
  CHECK(c.is_undetermined());
  CHECK(c.exponents().empty());
  CHECK(c.verdict_name() == "Undetermined");
}

TEST_CASE("Saito certificates") {
  const Multiarrangement am(kRank2, {2, 2, 1});
  const auto w = saito_basis(am, {2, 3});
  REQUIRE(w);
  CHECK(verify_saito(am, *w));
  SaitoWitness broken = *w;
  broken.scalar *= 2;
  CHECK_FALSE(verify_saito(am, broken));
  CHECK_FALSE(saito_basis(am, {1, 4}).has_value());
}

TEST_CASE("rank-two closed forms") {
  CHECK(wakamiko_exponents(0, 0, 0) == std::array<int, 2>{0, 0});
  CHECK(wakamiko_exponents(1, 1, 1) == std::array<int, 2>{1, 2});
  CHECK(wakamiko_exponents(3, 1, 0) == std::array<int, 2>{3, 1});
  CHECK(wakamiko_exponents(1, 1, 5) == std::array<int, 2>{5, 2});
  CHECK(lemma_rk2_charpoly(0, 0, 0) == UniPoly({0, 0, Rational(-1), Rational(1)}));
  CHECK(lemma_rk2_charpoly(2, 2, 1) ==
        UniPoly::from_integer_roots(std::vector<long>{1}) * UniPoly({Rational(7), Rational(-5), Rational(1)}));
  CHECK_THROWS_AS(wakamiko_exponents(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(rank2_exponents(Multiarrangement::simple(builtin("A3")->arrangement)), std::invalid_argument);
}

TEST_CASE("rank-two exponents survive coordinate changes") {
  RatMatrix g = RatMatrix::identity(2);
  g(0, 1) = 2;
  g(1, 0) = -1;
  const Multiarrangement am(transform(kRank2, g), {3, 1, 2});
  CHECK(rank2_exponents(am) == std::array<int, 2>{3, 3});
}

TEST_CASE("rank-three criterion") {
  const auto a = simple_rank3_free(builtin("remark-2.7-a")->arrangement);
  CHECK(a.witness_kind() == "NonFactoringChi");
  const auto b = simple_rank3_free(builtin("remark-2.7-b")->arrangement, Rank3Options{true});
  REQUIRE(b.is_free());
  CHECK(b.exponents() == std::vector<int>{1, 2, 3});
  CHECK(recheck(Multiarrangement::simple(builtin("remark-2.7-b")->arrangement), b));
  CHECK_THROWS_AS(simple_rank3_free(builtin("A2")->arrangement), std::invalid_argument);
}

TEST_CASE("rank-three verdict matches the full freeness test") {
  std::mt19937 gen(13);
  for (int it = 0; it < 25; ++it) {
    const Arrangement a = oracle::random_arrangement(gen, 3, 3 + gen() % 4, 1, 0);
    if (a.rank() != 3) continue;
    const auto fast = simple_rank3_free(a);
    const auto full = is_free_simple(a);
    CHECK(fast.is_free() == full.is_free());
    if (fast.is_free()) CHECK(fast.exponents() == full.exponents());
  }
}

TEST_CASE("canonical extensions") {
  const auto a2 = builtin("A2")->arrangement;
  const auto id = PositiveSystem::identity(3);
  const auto free_ext = extension_free(a2, id, {2, 2, 2});
  CHECK(free_ext.exponents() == std::vector<int>{1, 3, 3});
  const auto bad = extension_free(a2, id, {2, 2, 1});
  CHECK(bad.is_nonfree());
  const auto one = extension_free(a2, id, {3, 0, 0});
  CHECK(one.exponents() == std::vector<int>{0, 1, 3});
  const auto a3 = builtin("A3")->arrangement;
  CHECK(extension_free(a3, PositiveSystem::identity(6), std::vector<int>(6, 1)).exponents() ==
        std::vector<int>{1, 1, 2, 3});
  CHECK_THROWS_AS(extension_free(builtin("remark-2.3")->arrangement, PositiveSystem::identity(7),
                                 std::vector<int>(7, 1)),
                  std::invalid_argument);
}

TEST_CASE("generic scan") {
  const Arrangement g = builtin("generic4")->arrangement;
  CHECK(is_generic(g));
  CHECK_FALSE(is_generic(builtin("A3")->arrangement));
  const auto report = totally_nonfree_scan(g, 2);
  CHECK(report.total == 16);
  CHECK(report.nonfree == 16);
  CHECK(report.free_multiplicities.empty());
  CHECK_THROWS_AS(totally_nonfree_scan(builtin("A2")->arrangement, 2), std::invalid_argument);
}
