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

#include "compoz/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace compoz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

u64 parse_u64(std::string_view s) {
  s = trim(s);
  u64 v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw ParseError("not a non-negative integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

FieldContext parse_field(std::string_view spec) {
  spec = trim(spec);
  const auto caret = spec.find('^');
  if (caret == std::string_view::npos) {
    const u64 p = parse_u64(spec);
    if (!is_prime(p)) throw ParseError("field characteristic is not prime: " + std::string(spec));
    return FieldContext::prime(p);
  }
  const auto colon = spec.find(':', caret);
  if (colon == std::string_view::npos) throw ParseError("field spec 'p^e' needs ':modulus'");
  const u64 p = parse_u64(spec.substr(0, caret));
  const u64 e = parse_u64(spec.substr(caret + 1, colon - caret - 1));
  if (!is_prime(p)) throw ParseError("field characteristic is not prime: " + std::to_string(p));
  std::vector<u64> mod;
  for (auto part : split(spec.substr(colon + 1), ',')) mod.push_back(parse_u64(part));
  if (mod.size() != e + 1) throw ParseError("field modulus must have e+1 coefficients");
  for (u64 c : mod)
    if (c >= p) throw ParseError("field modulus coefficient not reduced mod p");
  try {
    return FieldContext::prime_power(p, mod);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

std::string format_field(const FieldContext& base) {
  const FieldContext b = base.base();
  if (b.base_degree() == 1) return std::to_string(b.characteristic());
  // The prime-power base is F_p[x]/(modulus); recover the modulus from x^e.
  const int e = b.base_degree();
  const auto xe = b.generator().pow(static_cast<u64>(e));
  std::ostringstream os;
  os << b.characteristic() << "^" << e << ":";
  const u64 p = b.characteristic();
  for (int i = 0; i < e; ++i) os << (p - xe.coords()[static_cast<std::size_t>(i)]) % p << ",";
  os << 1;
  return os.str();
}

FieldElement parse_element(const FieldContext& ctx, std::string_view text) {
  const auto parts = split(text, '/');
  const u64 p = ctx.characteristic();
  if (parts.size() == 1) {
    const u64 v = parse_u64(parts[0]);
    if (v >= p) throw ParseError("coefficient not reduced mod p: " + std::to_string(v));
    return ctx.constant(v);
  }
  if (parts.size() != ctx.width()) throw ParseError("element needs " + std::to_string(ctx.width()) + " '/'-separated coordinates");
  std::vector<u64> c;
  for (auto part : parts) {
    const u64 v = parse_u64(part);
    if (v >= p) throw ParseError("coordinate not reduced mod p: " + std::to_string(v));
    c.push_back(v);
  }
  return ctx.element(std::move(c));
}

std::string format_element(const FieldElement& x) {
  const auto c = x.coords();
  bool scalar = true;
  for (std::size_t i = 1; i < c.size(); ++i) scalar = scalar && c[i] == 0;
  if (scalar) return std::to_string(c.empty() ? 0 : c[0]);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(c[i]);
  }
  return out;
}

Polynomial parse_polynomial(const FieldContext& ctx, std::string_view text) {
  text = trim(text);
  if (text.empty()) return Polynomial(ctx);
  std::vector<FieldElement> c;
  for (auto part : split(text, ',')) c.push_back(parse_element(ctx, part));
  return Polynomial(ctx, std::move(c));
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += format_element(f.coeffs()[i]);
  }
  return out;
}

std::string pretty_polynomial(const Polynomial& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const FieldElement c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = format_element(c);
    if (cs.find('/') != std::string::npos) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += cs;
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Basis parse_basis(std::string_view name) {
  name = trim(name);
  if (name == "monomial") return Basis::monomial;
  if (name == "linearized") return Basis::linearized;
  throw ParseError("unknown basis '" + std::string(name) + "' (expected monomial or linearized)");
}

namespace {

PhiPoly phi_from_rows(const FieldContext& base, const std::vector<std::vector<std::string_view>>& rows, Basis basis) {
  if (rows.empty() || rows.front().empty()) throw ParseError("coefficient matrix is empty");
  const std::size_t n = rows.front().size();
  Matrix c(base, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw ParseError("coefficient matrix rows have different lengths");
    for (std::size_t j = 0; j < n; ++j) c(i, j) = parse_element(base, rows[i][j]);
  }
  return PhiPoly(std::move(c), basis);
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

PhiPoly parse_phi_impl(const FieldContext* base, std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  for (auto line : split(text, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(words(line));
  }
  if (lines.empty()) throw ParseError("coefficient document is empty");
  const auto& head = lines.front();
  if (head.size() != 4) throw ParseError("header must read 'q m n basis'");
  const u64 q = parse_u64(head[0]);
  const u64 m = parse_u64(head[1]);
  const u64 n = parse_u64(head[2]);
  const Basis basis = parse_basis(head[3]);
  FieldContext ctx = base ? *base : FieldContext();
  if (base) {
    if (base->base_order() != q) throw ParseError("header q = " + std::to_string(q) + " does not match the field");
  } else {
    if (!is_prime(q)) throw ParseError("header q must be prime unless a field is given");
    ctx = FieldContext::prime(q);
  }
  if (m == 0 || n == 0) throw ParseError("m and n must be positive");
  if (lines.size() - 1 != m) throw ParseError("expected " + std::to_string(m) + " coefficient rows");
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].size() != n) throw ParseError("expected " + std::to_string(n) + " entries in row " + std::to_string(i - 1));
  return phi_from_rows(ctx, {lines.begin() + 1, lines.end()}, basis);
}

}  // namespace

PhiPoly parse_phi_document(const FieldContext& base, std::string_view text) { return parse_phi_impl(&base, text); }

PhiPoly parse_phi_document(std::string_view text) { return parse_phi_impl(nullptr, text); }

std::string format_phi_document(const PhiPoly& phi) {
  std::ostringstream os;
  os << phi.context().base_order() << ' ' << phi.m() << ' ' << phi.n() << ' ' << to_string(phi.basis()) << '\n';
  const Matrix& c = phi.coefficients();
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) os << (j ? " " : "") << format_element(c(i, j));
    os << '\n';
  }
  return os.str();
}

PhiPoly parse_phi_rows(const FieldContext& base, std::string_view text, Basis basis) {
  std::vector<std::vector<std::string_view>> rows;
  for (auto row : split(text, ';')) rows.push_back(split(row, ','));
  return phi_from_rows(base, rows, basis);
}

}  // namespace compoz
