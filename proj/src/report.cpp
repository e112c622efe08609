/* Copyright 2026 The compoz Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "compoz/report.hpp"

#include "compoz/text_format.hpp"

namespace compoz {

Json make_document(const std::string& kind) {
  Json doc = Json::object();
  doc["schema"] = kSchema;
  doc["kind"] = kind;
  return doc;
}

Json to_json(const Polynomial& f) { return format_polynomial(f); }

Json to_json(const PhiPoly& phi) {
  Json rows = Json::array();
  const Matrix& c = phi.coefficients();
  for (std::size_t i = 0; i < c.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.cols(); ++j) row.push_back(format_element(c(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"basis", to_string(phi.basis())}, {"m", phi.m()}, {"n", phi.n()}, {"coefficients", std::move(rows)}};
}

Json to_json(const CcVerdict& v) {
  Json out{{"holds", v.holds}, {"route", to_string(v.route)}, {"witness", nullptr}};
  if (v.witness) out["witness"] = Json{{"k", v.witness->k}, {"side", to_string(v.witness->side)}, {"j", v.witness->j}};
  return out;
}

Json to_json(const FactorReport& r) {
  Json factors = Json::array();
  for (const auto& [h, mult] : r.factors())
    factors.push_back(Json{{"polynomial", to_json(h)}, {"degree", h.degree()}, {"multiplicity", mult}});
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"j", e.j},
                           {"value", format_element(e.value)},
                           {"degree", e.degree},
                           {"minimal_polynomial", to_json(e.minimal_polynomial)},
                           {"multiplicity", e.multiplicity}});
  return Json{{"m", r.m},
              {"n", r.n},
              {"gcd", r.g},
              {"lcm", r.L},
              {"cc_holds", r.cc_holds},
              {"all_factors_max_degree", r.all_factors_max_degree},
              {"distinct_factor_count", r.distinct_factor_count},
              {"factors", std::move(factors)},
              {"orbits", std::move(entries)}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace compoz
