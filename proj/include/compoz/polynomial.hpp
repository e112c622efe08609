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

#ifndef COMPOZ_POLYNOMIAL_HPP
#define COMPOZ_POLYNOMIAL_HPP

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "compoz/field.hpp"

namespace compoz {

/// Dense univariate polynomial over a FieldContext, ascending coefficients,
/// never storing trailing zeros.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial. Compare against it; never do
  /// arithmetic with it.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(FieldContext ctx);
  Polynomial(FieldContext ctx, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial monomial(const FieldElement& c, int degree);
  /// X.
  static Polynomial x(const FieldContext& ctx);
  /// X - c.
  static Polynomial linear(const FieldElement& c);

  const FieldContext& context() const { return ctx_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  /// Coefficient of X^i; zero beyond the degree.
  FieldElement coeff(int i) const;
  const FieldElement& leading() const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  Polynomial monic() const;
  FieldElement evaluate(const FieldElement& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  Polynomial& operator*=(const FieldElement& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Canonical order: by degree, then coefficients from the top down.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void trim();

  FieldContext ctx_;
  std::vector<FieldElement> coeffs_;
};

/// (quotient, remainder). Throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// base^exponent mod modulus.
Polynomial pow_mod(const Polynomial& base, u64 exponent, const Polynomial& modulus);

/// h^|ctx| mod modulus, i.e. the Frobenius of the coefficient field applied
/// through the quotient ring; computed as e*m successive p-th powers.
Polynomial field_order_power_mod(const Polynomial& h, const Polynomial& modulus);

/// a(b(X)) mod modulus.
Polynomial compose_mod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus);

/// Coefficients of an F_q polynomial embedded into an extension of F_q.
Polynomial embed_coefficients(const Polynomial& f, const FieldContext& ext);

/// Inverse of embed_coefficients; empty if some coefficient is not in F_q.
std::optional<Polynomial> project_coefficients(const Polynomial& f);

/// Applies x -> x^(q^k) to every coefficient.
Polynomial frobenius_coefficients(const Polynomial& f, long long k);

/// f evaluated at x where f is over F_q and x lives in an extension of F_q.
FieldElement evaluate_embedded(const Polynomial& f, const FieldElement& x);

/// prod (X - r) over the given roots.
Polynomial from_roots(const FieldContext& ctx, const std::vector<FieldElement>& roots);

/// Rabin's test over the coefficient field of f. Throws std::invalid_argument
/// if f is not monic of degree >= 1.
bool is_irreducible(const Polynomial& f);

/// Uniform monic irreducible of the given degree by rejection sampling.
Polynomial random_irreducible(const FieldContext& ctx, int degree, Rng& rng);

/// F_q[y]/(modulus) after checking the modulus is monic irreducible over F_q.
FieldContext extension_field(const Polynomial& modulus);

/// Degree-d extension of a base context, built from a seeded random modulus.
FieldContext random_extension(const FieldContext& base, int degree, Rng& rng);

/// A root of f (over F_q) inside ext = F_{q^L}, for irreducible f of degree
/// m | L. Exhaustive scan when |ext| <= 2^16, otherwise seeded equal-degree
/// splitting. Throws std::invalid_argument if m does not divide L.
FieldElement find_root(const Polynomial& f, const FieldContext& ext, Rng& rng);

/// Minimal polynomial of gamma over F_q, returned over base().
Polynomial minimal_polynomial(const FieldElement& gamma);

}  // namespace compoz

#endif  // COMPOZ_POLYNOMIAL_HPP
