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

#ifndef COMPOZ_DIAMOND_HPP
#define COMPOZ_DIAMOND_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "compoz/field.hpp"
#include "compoz/matrix.hpp"
#include "compoz/orbits.hpp"
#include "compoz/polynomial.hpp"

namespace compoz {

/// Monomial: phi = sum c_ij X^i Y^j. Linearized: phi = sum c_ij X^(q^i) Y^(q^j).
enum class Basis { monomial, linearized };

const char* to_string(Basis b);

/// A bivariate polynomial over F_q given by its m x n coefficient matrix.
class PhiPoly {
 public:
  PhiPoly() = default;
  PhiPoly(Matrix coefficients, Basis basis = Basis::monomial);

  const Matrix& coefficients() const { return c_; }
  Basis basis() const { return basis_; }
  const FieldContext& context() const { return c_.context(); }
  int m() const { return static_cast<int>(c_.rows()); }
  int n() const { return static_cast<int>(c_.cols()); }

  /// chi_i(Y): row i read as a polynomial in Y.
  Polynomial row_poly(int i) const;
  /// psi_j(X): column j read as a polynomial in X.
  Polynomial col_poly(int j) const;
  std::vector<Polynomial> row_polys() const;
  std::vector<Polynomial> col_polys() const;

  /// phi(x, y) for x, y in one extension of F_q.
  FieldElement evaluate(const FieldElement& x, const FieldElement& y) const;

 private:
  Matrix c_;
  Basis basis_ = Basis::monomial;
};

/// Univariate polynomial sum a_k Z^k (monomial) or sum a_k Z^(q^k) (linearized).
Polynomial basis_polynomial(const FieldContext& ctx, const std::vector<FieldElement>& coeffs, Basis basis);

/// phi = sum_s u_s(X) v_s(Y) with r = rank(C) terms.
struct SeparatedRep {
  std::size_t rank = 0;
  std::vector<Polynomial> u;
  std::vector<Polynomial> v;
};

SeparatedRep rank_decomposition(const PhiPoly& phi);

/// Diamond product given by its values gamma_j = alpha (.) beta^(q^j) on the
/// orbit representatives (0, j), j < gcd(m, n). Values live in one context
/// whose degree over F_q is a multiple of lcm(m, n); the constructor checks
/// gamma_j^(q^lcm(m,n)) = gamma_j.
class TableDiamond {
 public:
  TableDiamond() = default;
  TableDiamond(int m, int n, std::vector<FieldElement> values);

  int m() const { return m_; }
  int n() const { return n_; }
  const FieldContext& context() const { return values_.front().context(); }
  const std::vector<FieldElement>& values() const { return values_; }

  /// Value at (alpha^(q^i), beta^(q^j)) by Frobenius shift along the orbit.
  FieldElement evaluate(long long i, long long j) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<FieldElement> values_;
};

using DiamondSpec = std::variant<PhiPoly, TableDiamond>;

int spec_m(const DiamondSpec& d);
int spec_n(const DiamondSpec& d);
/// F_q of the spec.
FieldContext spec_base(const DiamondSpec& d);

/// Roots alpha of f and beta of g in a common extension.
struct RootBinding {
  FieldContext ext;
  FieldElement alpha;
  FieldElement beta;
};

/// Roots of f and g inside ext (whose degree must be a multiple of both).
RootBinding bind_roots(const Polynomial& f, const Polynomial& g, const FieldContext& ext, Rng& rng);

/// A diamond spec with fixed alpha (degree m) and beta (degree n).
class BoundDiamond {
 public:
  BoundDiamond(DiamondSpec spec, FieldElement alpha, FieldElement beta);

  const DiamondSpec& spec() const { return spec_; }
  const FieldContext& context() const { return alpha_.front().context(); }
  int m() const { return m_; }
  int n() const { return n_; }
  const OrbitStructure& orbits() const { return orbits_; }

  /// alpha^(q^i), beta^(q^j); indices taken mod m, n.
  const FieldElement& alpha(long long i) const;
  const FieldElement& beta(long long j) const;

  /// alpha^(q^i) (.) beta^(q^j).
  FieldElement evaluate(long long i, long long j) const;

 private:
  DiamondSpec spec_;
  int m_;
  int n_;
  OrbitStructure orbits_;
  std::vector<FieldElement> alpha_;
  std::vector<FieldElement> beta_;
};

/// Binds the spec to roots of f and g. Phi specs get a seeded random
/// extension of degree lcm(m, n); table specs use the table's context.
/// Throws std::invalid_argument unless f, g are monic irreducible of degrees
/// matching the spec.
BoundDiamond bind_diamond(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng);

/// prod_{i<m, j<n} (X - alpha^(q^i) (.) beta^(q^j)) over F_q.
Polynomial composed_product(const BoundDiamond& d);
Polynomial composed_product(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng);

/// Table spec holding the representative values of a bound diamond.
TableDiamond tabulate(const BoundDiamond& d);

struct FactorEntry {
  int j = 0;  // representative (0, j)
  FieldElement value;
  int degree = 0;  // r_j
  Polynomial minimal_polynomial;
  int multiplicity = 0;  // lcm(m, n) / r_j
};

struct FactorReport {
  int m = 0;
  int n = 0;
  int g = 0;
  int L = 0;
  std::vector<FactorEntry> entries;
  bool cc_holds = false;
  bool all_factors_max_degree = false;
  std::size_t distinct_factor_count = 0;

  /// Distinct irreducible factors with total multiplicity, sorted by degree
  /// then coefficients.
  std::vector<std::pair<Polynomial, int>> factors() const;
  /// prod of factors^multiplicity.
  Polynomial reconstruct() const;
};

FactorReport factor_report(const BoundDiamond& d);
FactorReport factor_report(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng);

/// Factors f_0^(mu) (.) g_0^(nu) of f (.) g over F_{q^(k l)}, ordered by
/// (mu, nu) with mu < k, nu < l. Requires gcd(m, n) = 1, k | m, l | n.
/// Coefficients live in sub, a context of degree k*l over F_q.
std::vector<Polynomial> intermediate_factorization(const BoundDiamond& d, int k, int l, const FieldContext& sub, Rng& rng);

}  // namespace compoz

#endif  // COMPOZ_DIAMOND_HPP
