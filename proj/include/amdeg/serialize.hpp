#pragma once

#include <string>

#include "json.hpp"

#include "classify.hpp"
#include "parser.hpp"
#include "varieties.hpp"

namespace amdeg {

using Json = nlohmann::ordered_json;

inline Json to_json(const IntPoly& p) { return Json(p.coefficients()); }

inline Json to_json(const HilbertSeries& s) {
  HilbertSeries r = s.reduced();
  Json j;
  j["numerator"] = to_json(s.numerator());
  j["den_exp"] = s.den_exp();
  j["reduced_numerator"] = to_json(r.numerator());
  j["reduced_den_exp"] = r.den_exp();
  return j;
}

inline Json to_json(const BettiDiagram& b) {
  Json j;
  j["rows"] = b.rows();
  j["first_row"] = b.first_row();
  j["convention"] = "column i>=1, row j, entry = dim Tor_i in degree i+j";
  return j;
}

inline Json to_json(const NumericInvariants& inv) {
  Json j;
  j["dim"] = inv.dim;
  j["codim"] = inv.codim;
  j["degree"] = inv.degree;
  j["depth"] = inv.depth;
  j["codepth"] = inv.codepth;
  j["regularity"] = inv.regularity;
  j["projective_dimension"] = inv.projective_dim;
  return j;
}

inline Json to_json(const CheckResult& c) { return Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

inline Json to_json(const VarietyReport& r) {
  Json j;
  j["num_vars"] = r.num_vars;
  j["invariants"] = to_json(r.invariants);
  j["degree_class"] = to_string(r.degree_class);
  j["theorem_case"] = r.theorem_case ? Json(*r.theorem_case) : Json(nullptr);
  j["degenerate"] = r.degenerate;
  j["acm"] = r.acm;
  j["gorenstein"] = r.gorenstein;
  j["quadrics"] = r.quadrics;
  j["cubics"] = r.cubics;
  j["betti"] = to_json(r.betti);
  j["hilbert_series"] = to_json(r.series);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["all_passed"] = r.all_passed();
  return j;
}

inline Json to_json(const Ideal& ideal) {
  Json j;
  j["num_vars"] = ideal.num_vars();
  j["prime"] = ideal.ring()->modulus();
  j["variables"] = ideal.ring()->var_names();
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  j["generators"] = gens;
  return j;
}

inline Json to_json(const ScrollTypeRow& row) {
  return Json{{"type", row.type.to_string()}, {"parts", row.type.parts}, {"k", row.type.k()}, {"r_plus_1", row.r_plus_1}, {"dim_x", row.dim_x}};
}

/// Inverse of to_json(BettiDiagram).
inline BettiDiagram betti_from_json(const Json& j) {
  const int first = j.contains("first_row") ? j.at("first_row").get<int>() : 1;
  return BettiDiagram::from_rows(j.at("rows").get<std::vector<std::vector<long>>>(), first);
}

}  // namespace amdeg
