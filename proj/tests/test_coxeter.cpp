#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multiarr/coxeter.hpp"
#include "multiarr/lattice.hpp"

#include <cstdlib>

using namespace multiarr;

namespace {

UniPoly roots(std::vector<long> r) { return UniPoly::from_integer_roots(r); }

}  // namespace

TEST_CASE("root systems") {
  const auto a2 = root_system('A', 2), a3 = root_system('A', 3), d4 = root_system('D', 4);
  CHECK(a2.roots.size() == 3);
  CHECK(a2.h == 3);
  CHECK(a3.roots.size() == 6);
  CHECK(a3.h == 4);
  CHECK(d4.roots.size() == 12);
  CHECK(d4.h == 6);
  CHECK(a2.label() == "A2");
  for (const auto* r : {&a2, &a3, &d4}) {
    CHECK(is_locally_A2(r->roots));
    CHECK(is_positive_system(r->roots));
    CHECK(r->roots.rank() == r->rank);
  }
  CHECK_THROWS_AS(root_system('E', 6), std::invalid_argument);
  CHECK_THROWS_AS(root_system('A', 5), std::invalid_argument);
  CHECK_THROWS_AS(root_system('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(root_system('A', 1), std::invalid_argument);
}

TEST_CASE("Shi and Catalan arrangements") {
  const auto a2 = root_system('A', 2), a3 = root_system('A', 3);
  CHECK(shi_catalan(a2, 1, Parity::Shi).size() == 7);
  CHECK(shi_catalan(a2, 1, Parity::Catalan).size() == 10);
  CHECK(shi_catalan(a3, 1, Parity::Catalan).size() == 19);
  CHECK(char_poly(shi_catalan(a3, 1, Parity::Shi)).poly == roots({1, 4, 4, 4}));
  CHECK(char_poly(shi_catalan(a2, 2, Parity::Catalan)).poly == roots({1, 7, 8}));
  CHECK_THROWS_AS(shi_catalan(a2, 0, Parity::Shi), std::invalid_argument);
}

TEST_CASE("interpolation enumeration on A2") {
  const auto a2 = root_system('A', 2);
  const auto qual = enumerate_interpolations(a2, 1);
  CHECK(qual.size() == 7);
  for (const auto& r : qual) CHECK(r.m != std::vector<int>{0, 1, 0});
  CHECK(qual.front().m == std::vector<int>{0, 0, 0});
  CHECK(qual.front().predicted_plus == std::vector<int>{1, 3, 3});
  CHECK(qual.back().m == std::vector<int>{1, 1, 1});
  CHECK(qual.back().subarrangement_exponents == std::vector<int>{1, 2});
  CHECK(qual.back().predicted_plus == std::vector<int>{1, 4, 5});
  CHECK(qual.back().predicted_minus == std::vector<int>{1, 1, 2});
}

TEST_CASE("three-way equivalence") {
  const auto a2 = root_system('A', 2);
  CHECK(check_prop_ay(a2, {1, 1, 1}, 1));
  CHECK(check_prop_ay(a2, {1, 1, 0}, 1));
  CHECK(check_prop_ay(a2, {0, 0, 0}, 2));
  CHECK(check_prop_ay(root_system('A', 3), {1, 0, 1, 0, 1, 1}, 1));
  CHECK_THROWS_AS(check_prop_ay(a2, {2, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("deconed characteristic polynomials") {
  const auto a2 = root_system('A', 2), a3 = root_system('A', 3);
  CHECK(functional_equation_check(a2, {1, 1, 0}, 1));
  CHECK(functional_equation_check(a2, {0, 0, 0}, 1));
  CHECK(functional_equation_check(a2, {0, 0, 0}, 2));
  CHECK(functional_equation_check(a3, std::vector<int>(6, 1), 1));
  CHECK(corollary_chi_check(a2, {1, 1, 1}, 1));
  CHECK(corollary_chi_check(a2, {0, 0, 0}, 1));
  CHECK(corollary_chi_check(a3, std::vector<int>(6, 1), 1));
  CHECK(corollary_chi_check(a2, {1, 1, 1}, 2));
}

TEST_CASE("classification records") {
  const auto a2 = root_system('A', 2);
  const auto excluded = classify(a2, {0, 1, 0}, 1);
  CHECK_FALSE(excluded.qualifies);
  CHECK(excluded.equivalence_holds);
  CHECK((excluded.plus.is_nonfree() || excluded.minus.is_nonfree()));
  const auto full = classify(a2, {1, 1, 1}, 1);
  CHECK(full.qualifies);
  CHECK(full.plus.exponents() == std::vector<int>{1, 4, 5});
  CHECK(full.minus.exponents() == std::vector<int>{1, 1, 2});
  CHECK(full.functional_equation);
  CHECK(full.corollary_chi);
}

TEST_CASE("reports are sorted and independent of the worker count") {
  const auto a2 = root_system('A', 2);
  ReportOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto r1 = interpolation_report(a2, one), r4 = interpolation_report(a2, four);
  REQUIRE(r1.size() == 8);
  REQUIRE(r4.size() == 8);
  for (size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].m == r4[i].m);
    CHECK(r1[i].plus.verdict_name() == r4[i].plus.verdict_name());
    CHECK(r1[i].minus.exponents() == r4[i].minus.exponents());
    if (i) CHECK(r1[i - 1].m < r1[i].m);
  }
  setenv("MULTIARR_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  CHECK(worker_count(5) == 5);
  unsetenv("MULTIARR_THREADS");
}

TEST_CASE("rank four requires sampling") {
  const auto d4 = root_system('D', 4);
  CHECK_THROWS_AS(interpolation_report(d4, {}), std::length_error);
  ReportOptions s;
  s.sample = 2;
  s.seed = 5;
  const auto a = interpolation_report(d4, s), b = interpolation_report(d4, s);
  REQUIRE(a.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].equivalence_holds);
  }
}
