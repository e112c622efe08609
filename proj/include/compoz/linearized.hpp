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

#ifndef COMPOZ_LINEARIZED_HPP
#define COMPOZ_LINEARIZED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "compoz/diamond.hpp"
#include "compoz/field.hpp"
#include "compoz/matrix.hpp"
#include "compoz/polynomial.hpp"

namespace compoz {

/// Whether gamma, gamma^q, ..., gamma^(q^(d-1)) is an F_q-basis of F_{q^d}.
/// gamma may live in any extension whose degree is a multiple of d.
bool is_normal(const FieldElement& gamma, int d);
/// Normal over F_q in its own context.
bool is_normal(const FieldElement& gamma);

/// Uniform normal element of the degree-d subfield of ctx by rejection
/// sampling (d defaults to the full degree).
FieldElement random_normal_element(const FieldContext& ctx, Rng& rng);
FieldElement random_normal_element(const FieldContext& ctx, int d, Rng& rng);

/// For linearized phi with gcd(m, n) = 1: cancellation on all normal pairs,
/// decided by comparing C with its cyclic row shifts by m/p (p | m prime) and
/// column shifts by n/p (p | n prime).
bool bilinear_cc_test(const Matrix& c);

/// q-degree of a q-polynomial sum a_t X^(q^t), or nothing if some exponent is
/// not a power of q. The zero polynomial has no q-degree either.
std::optional<int> q_degree(const Polynomial& psi);

/// sum_t coeffs[t] x^(q^t) for coefficients over F_q.
FieldElement evaluate_q_polynomial(const std::vector<FieldElement>& coeffs, const FieldElement& x);

/// deg(psi) < q^(m - m1) with m1 the largest proper divisor of m. Sufficient
/// for psi(alpha) to have degree m for every normal alpha of degree m.
bool linearized_degree_criterion(const Polynomial& psi, int m);

/// e = sum_k c_(k mod m, k mod n) X^k for k < mn.
struct StaircasePoly {
  int m = 0;
  int n = 0;
  Polynomial e;
};

/// Requires a linearized phi with gcd(m, n) = 1.
StaircasePoly staircase(const PhiPoly& phi);

/// The exponent s < mn with s = i (mod m) and s = j (mod n).
int staircase_exponent(int i, int j, int m, int n);

/// gcd(e, X^(mn) - 1) = 1.
bool staircase_coprime(const StaircasePoly& s);

/// Whether phi(alpha, beta) is normal over F_q for normal alpha, beta.
bool staircase_normal_test(const PhiPoly& phi);

enum class Sign { plus, minus };

struct TwistedParams {
  u64 q = 0;
  int m = 0;
  int n = 0;
  int k = 0;  // left twist
  int l = 0;  // right twist
  Sign sign = Sign::plus;
};

/// X^(q^k) Y + sign * X Y^(q^l) as a linearized phi over the given F_q.
PhiPoly twisted_phi(const TwistedParams& t, const FieldContext& base);

/// Closed-form normality of alpha^(q^k) beta + sign * alpha beta^(q^l).
bool twisted_normal_predicate(const TwistedParams& t);

/// is_normal(alpha + beta + d) over F_{q^(mn)}, where alpha, beta have
/// coprime degrees m, n.
bool shifted_sum_is_normal(const FieldElement& alpha, const FieldElement& beta, const FieldElement& d);

}  // namespace compoz

#endif  // COMPOZ_LINEARIZED_HPP
