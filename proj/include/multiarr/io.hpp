#pragma once

#include "multiarr/coxeter.hpp"
#include "multiarr/freeness.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace multiarr {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArrangementInput {
  Arrangement arrangement;
  std::vector<int> mult;  // 1 where the input omits "mult"
};

/// {"dim": n, "hyperplanes": [{"coeffs": [...], "constant": q, "mult": m}]}
/// Coefficients are integers or rational strings ("-3/2"). Throws ParseError.
ArrangementInput parse_arrangement(const nlohmann::json& j);
ArrangementInput parse_arrangement_text(const std::string& text);

nlohmann::json arrangement_to_json(const Arrangement& a, const std::vector<int>& mult = {});

nlohmann::json unipoly_to_json(const UniPoly& p);
nlohmann::json flat_to_json(const Flat& f);
nlohmann::json certificate_to_json(const FreenessCertificate& c);
nlohmann::json record_to_json(const InterpolationRecord& r);

}  // namespace multiarr
