#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multiarr/builtins.hpp"
#include "multiarr/io.hpp"

using namespace multiarr;
using nlohmann::json;

TEST_CASE("arrangement JSON round trip") {
  for (const auto& name : builtin_names()) {
    const auto in = *builtin(name);
    const json j = arrangement_to_json(in.arrangement, in.mult);
    const auto back = parse_arrangement(json::parse(j.dump()));
    CHECK(back.arrangement == in.arrangement);
    CHECK(back.mult == in.mult);
  }
}

TEST_CASE("parsing accepts rationals, integers and the Unicode minus") {
  const auto in = parse_arrangement_text(
      R"({"dim": 2, "hyperplanes": [{"coeffs": [1, "−3/2"], "constant": "1/2", "mult": 3},
                                     {"coeffs": ["0", 2]}]})");
  CHECK(in.arrangement[0].normal == RatVector{1, Rational(-3, 2)});
  CHECK(in.arrangement[0].constant == Rational(1, 2));
  CHECK(in.mult == std::vector<int>{3, 1});
  CHECK(in.arrangement[1].constant == 0);
  const json out = arrangement_to_json(in.arrangement);
  CHECK(out["hyperplanes"][0]["coeffs"][1] == "-3/2");
  CHECK_FALSE(out["hyperplanes"][0].contains("mult"));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_arrangement_text("{"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_text("[]"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_text(R"({"dim": 2})"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_text(R"({"dim": 2, "hyperplanes": [{"coeffs": [1]}]})"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_text(R"({"dim": 1, "hyperplanes": [{"coeffs": ["1/0"]}]})"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_text(R"({"dim": 1, "hyperplanes": [{"coeffs": [1.5]}]})"), ParseError);
  CHECK_THROWS_AS(parse_arrangement_text(R"({"dim": 1, "hyperplanes": [{"coeffs": [1], "mult": -1}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_arrangement_text(R"({"dim": 1, "hyperplanes": [{"coeffs": [1]}, {"coeffs": [2]}]})"),
                  ParseError);
}

TEST_CASE("polynomial and certificate JSON") {
  const json p = unipoly_to_json(UniPoly::from_integer_roots(std::vector<long>{1, 3, 3}));
  CHECK(p["factored"] == "(t-1)(t-3)^2");
  CHECK(p["coefficients"] == json::array({"-9", "15", "-7", "1"}));

  const auto in = *builtin("example-2.8");
  const auto free = certificate_to_json(is_free_multi(Multiarrangement(in.arrangement, in.mult)));
  CHECK(free["verdict"] == "Free");
  CHECK(free["exponents"] == json::array({8, 9, 9}));
  CHECK(free["saito"]["basis"].size() == 3);

  const auto ext = certificate_to_json(
      extension_free(in.arrangement, PositiveSystem::identity(in.arrangement.size()), in.mult));
  CHECK(ext["verdict"] == "NonFree");
  CHECK(ext["witness"]["kind"] == "NonFreeLocalization");
  CHECK(ext["witness"]["flat"]["indices"] == json::array({0, 1, 3}));
  CHECK(ext["witness"]["localized_chi"]["factored"] == "(t-1)(t^2 - 13t + 43)");

  const auto g = builtin("generic4")->arrangement;
  const auto nf = certificate_to_json(is_free_simple(g));
  CHECK(nf["witness"]["kind"] == "HilbertMismatch");
  CHECK(nf["witness"]["dims"].is_array());
  const auto und = certificate_to_json(is_free_simple(g, FreenessOptions{0, 4}));
  CHECK(und["verdict"] == "Undetermined");
}
