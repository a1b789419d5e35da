#include "multiarr/io.hpp"

namespace multiarr {

using nlohmann::json;

namespace {

Rational read_rational(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected an integer or a rational string");
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

ArrangementInput parse_arrangement(const json& j) {
  if (!j.is_object()) throw ParseError("arrangement must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw ParseError("\"dim\" must be a nonnegative integer");
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array())
    throw ParseError("\"hyperplanes\" must be an array");
  const size_t dim = j["dim"].get<size_t>();
  ArrangementInput in;
  std::vector<Hyperplane> hs;
  size_t idx = 0;
  for (const auto& h : j["hyperplanes"]) {
    const std::string where = "hyperplane " + std::to_string(idx++);
    if (!h.is_object() || !h.contains("coeffs") || !h["coeffs"].is_array())
      throw ParseError(where + ": missing \"coeffs\" array");
    Hyperplane hp;
    for (const auto& c : h["coeffs"]) hp.normal.push_back(read_rational(c, where));
    hp.constant = h.contains("constant") ? read_rational(h["constant"], where) : Rational(0);
    int m = 1;
    if (h.contains("mult")) {
      if (!h["mult"].is_number_integer() || h["mult"].get<long long>() < 0)
        throw ParseError(where + ": \"mult\" must be a nonnegative integer");
      m = h["mult"].get<int>();
    }
    hs.push_back(std::move(hp));
    in.mult.push_back(m);
  }
  try {
    in.arrangement = Arrangement(dim, std::move(hs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return in;
}

ArrangementInput parse_arrangement_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_arrangement(j);
}

json arrangement_to_json(const Arrangement& a, const std::vector<int>& mult) {
  json hs = json::array();
  for (size_t i = 0; i < a.size(); ++i) {
    json h;
    h["coeffs"] = json::array();
    for (const auto& c : a[i].normal) h["coeffs"].push_back(rational_json(c));
    h["constant"] = rational_json(a[i].constant);
    if (!mult.empty()) h["mult"] = mult[i];
    hs.push_back(std::move(h));
  }
  return json{{"dim", a.dim()}, {"hyperplanes", std::move(hs)}};
}

json unipoly_to_json(const UniPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_json(c));
  return json{{"coefficients", std::move(coeffs)},
              {"polynomial", p.to_string()},
              {"factored", p.is_zero() ? "0" : factored_string(p)}};
}

json flat_to_json(const Flat& f) { return json{{"indices", f.indices}, {"codim", f.codim}}; }

json certificate_to_json(const FreenessCertificate& c) {
  json out;
  out["verdict"] = c.verdict_name();
  if (const auto* f = std::get_if<Free>(&c.verdict)) {
    out["exponents"] = f->exponents;
    if (f->saito) {
      json basis = json::array();
      for (const auto& delta : f->saito->basis) {
        json comps = json::array();
        for (const auto& p : delta) comps.push_back(p.to_string());
        basis.push_back(std::move(comps));
      }
      out["saito"] = json{{"determinant_scalar", rational_json(f->saito->scalar)}, {"basis", std::move(basis)}};
    }
  } else if (const auto* nf = std::get_if<NonFree>(&c.verdict)) {
    json w;
    w["kind"] = c.witness_kind();
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, HilbertMismatch>) {
            w["degree"] = x.degree;
            w["dims"] = x.dims;
          } else if constexpr (std::is_same_v<T, NonFactoringChi>) {
            w["chi"] = unipoly_to_json(x.chi);
          } else if constexpr (std::is_same_v<T, ExponentMismatch>) {
            w["from_chi"] = x.from_chi;
            w["from_restriction"] = x.from_restriction;
          } else {
            w["flat"] = flat_to_json(x.flat);
            w["localized_chi"] = unipoly_to_json(x.localized_chi);
            w["inner_kind"] = x.inner_kind;
          }
        },
        nf->witness);
    out["witness"] = std::move(w);
  } else {
    const auto& u = std::get<Undetermined>(c.verdict);
    out["cutoff"] = u.cutoff;
    out["reason"] = u.reason;
  }
  return out;
}

json record_to_json(const InterpolationRecord& r) {
  json out;
  out["m"] = r.m;
  out["qualifies"] = r.qualifies;
  out["subarrangement_exponents"] = r.subarrangement_exponents;
  out["predicted_plus"] = r.predicted_plus;
  out["predicted_minus"] = r.predicted_minus;
  out["plus_side"] = certificate_to_json(r.plus);
  out["minus_side"] = certificate_to_json(r.minus);
  out["functional_equation"] = r.functional_equation;
  out["corollary_chi"] = r.corollary_chi;
  out["equivalence_holds"] = r.equivalence_holds;
  return out;
}

}  // namespace multiarr
