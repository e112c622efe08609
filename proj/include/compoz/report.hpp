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

#ifndef COMPOZ_REPORT_HPP
#define COMPOZ_REPORT_HPP

#include <string>

#include <json.hpp>

#include "compoz/cancellation.hpp"
#include "compoz/diamond.hpp"

namespace compoz {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "compoz/1";

/// Top-level document {"schema": ..., "kind": kind} to be filled by the caller.
Json make_document(const std::string& kind);

Json to_json(const Polynomial& f);
Json to_json(const PhiPoly& phi);
Json to_json(const CcVerdict& v);
/// Factors ascending by degree, then by coefficients.
Json to_json(const FactorReport& r);

/// Key-sorted, two-space indented, trailing newline.
std::string dump(const Json& doc);

}  // namespace compoz

#endif  // COMPOZ_REPORT_HPP
