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

#ifndef COMPOZ_CANCELLATION_HPP
#define COMPOZ_CANCELLATION_HPP

#include <optional>
#include <vector>

#include "compoz/diamond.hpp"
#include "compoz/matrix.hpp"
#include "compoz/polynomial.hpp"

namespace compoz {

enum class Route { direct, oracle, algorithm1, matrix, exhaustive, bilinear };
/// left: alpha^(q^k) (.) beta = alpha (.) beta with alpha^(q^k) != alpha.
/// right: alpha (.) beta^(q^k) = alpha (.) beta with beta^(q^k) != beta.
enum class Side { left, right };

const char* to_string(Route r);
const char* to_string(Side s);

/// A literal violation at the pair (alpha, beta^(q^j)) with conjugate shift k.
struct CcWitness {
  long long k = 0;
  Side side = Side::left;
  int j = 0;
};

struct CcVerdict {
  bool holds = true;
  std::optional<CcWitness> witness;
  Route route = Route::direct;
};

/// Whether the witness really violates cancellation on d.
bool witness_is_violation(const BoundDiamond& d, const CcWitness& w);

/// Checks every multiple k of gcd(m, n) in [0, lcm(m, n)) on every orbit.
/// The witness is the smallest k, left side first, then the smallest j.
CcVerdict cc_direct(const BoundDiamond& d);

/// Field-degree test: every r_j must satisfy lcm(n, r_j) = lcm(m, r_j) = lcm(m, n).
CcVerdict cc_oracle(const BoundDiamond& d);

/// Subfield test for a fixed f: decides whether u_1(alpha), ..., u_r(alpha)
/// generate F_{q^m}. The powers xi^(q^(m/p)) are computed once and reused.
class SubfieldTest {
 public:
  explicit SubfieldTest(const Polynomial& f);

  const Polynomial& modulus() const { return f_; }
  int degree() const { return f_.degree(); }

  /// Smallest prime p of m such that every u(alpha) lies in F_{q^(m/p)},
  /// or nothing if the values generate F_{q^m}.
  std::optional<int> obstruction(const std::vector<Polynomial>& us) const;
  bool generates(const std::vector<Polynomial>& us) const { return !obstruction(us).has_value(); }

 private:
  Polynomial f_;
  std::vector<int> primes_;
  std::vector<Polynomial> frob_;  // xi^(q^(m/p)) mod f, per prime
};

bool algorithm1_verify_extension(const Polynomial& f, const std::vector<Polynomial>& us);

/// Subfield test on the columns (against f) and rows (against g) of a
/// monomial phi. Requires gcd(m, n) = 1.
CcVerdict cc_algorithm1(const Polynomial& f, const Polynomial& g, const PhiPoly& phi);

/// Rejection sampler: count uniformly random monomial phi that pass the
/// subfield test on both sides. Requires gcd(deg f, deg g) = 1 and irreducible f, g.
std::vector<PhiPoly> algorithm2_sample(const Polynomial& f, const Polynomial& g, int count, Rng& rng);

enum class FrobeniusBasis { power, normal };

struct FrobeniusMatrix {
  Matrix matrix;
  FrobeniusBasis basis = FrobeniusBasis::power;
};

/// Column j holds the coordinates of (alpha^j)^q in the basis 1, alpha, ..., alpha^(m-1).
FrobeniusMatrix petr_berlekamp_matrix(const Polynomial& f);
/// x -> x^q in a normal basis: the cyclic shift.
FrobeniusMatrix cyclic_shift_matrix(const FieldContext& base, int m);

/// (A^power - I) C.
Matrix frobenius_defect(const FrobeniusMatrix& a, u64 power, const Matrix& c);

/// (A^(m/p) - I) C != 0 for every prime p | m and (B^(n/p) - I) C^T != 0 for
/// every prime p | n. Requires gcd(m, n) = 1 and a monomial phi.
CcVerdict matrix_cc_test(const Polynomial& f, const Polynomial& g, const PhiPoly& phi);

/// rank(C) > max(m/m1, n/n1) with m1, n1 the smallest prime factors.
/// Sufficient only. Requires coprime m, n > 1.
bool rank_criterion(const Matrix& c, int m, int n);

/// Some row polynomial of degree in [1, n1) and some column polynomial of
/// degree in [1, m1). Sufficient only. Requires coprime m, n > 1.
bool degree_criterion(const PhiPoly& phi);

}  // namespace compoz

#endif  // COMPOZ_CANCELLATION_HPP
