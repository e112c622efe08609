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

#ifndef COMPOZ_TEXT_FORMAT_HPP
#define COMPOZ_TEXT_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "compoz/diamond.hpp"
#include "compoz/field.hpp"
#include "compoz/polynomial.hpp"

namespace compoz {

/// Raised for malformed text input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "p" or "p^e:c0,c1,...,ce" (ascending modulus coefficients over F_p).
FieldContext parse_field(std::string_view spec);
std::string format_field(const FieldContext& base);

/// Element as '/'-separated F_p coordinates ("2" in F_3, "1/0/2" in F_27).
FieldElement parse_element(const FieldContext& ctx, std::string_view text);
std::string format_element(const FieldElement& x);

/// Comma-separated ascending coefficients; "0" or "" is the zero polynomial.
Polynomial parse_polynomial(const FieldContext& ctx, std::string_view text);
std::string format_polynomial(const Polynomial& f);

/// Human-readable form such as "x^4 + x^2 + 2" (prime fields only use plain
/// integers; extension coefficients are shown in their coordinate form).
std::string pretty_polynomial(const Polynomial& f, char var = 'x');

Basis parse_basis(std::string_view name);

/// Coefficient-matrix document: a header line "q m n basis" followed by m
/// lines of n whitespace-separated elements. Blank lines and lines starting
/// with '#' are ignored. The header q must equal the order of base.
PhiPoly parse_phi_document(const FieldContext& base, std::string_view text);
/// Same, with F_q taken from the header (q must then be prime).
PhiPoly parse_phi_document(std::string_view text);
std::string format_phi_document(const PhiPoly& phi);

/// Inline rows: "c00,c01,...;c10,c11,...".
PhiPoly parse_phi_rows(const FieldContext& base, std::string_view text, Basis basis);

}  // namespace compoz

#endif  // COMPOZ_TEXT_FORMAT_HPP
