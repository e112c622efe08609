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

#ifndef COMPOZ_EMBEDDING_HPP
#define COMPOZ_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "compoz/field.hpp"
#include "compoz/matrix.hpp"
#include "compoz/polynomial.hpp"

namespace compoz {

/// Explicit F_q-linear field embedding F_{q^k} -> F_{q^L} for k | L, fixed by
/// sending the generator of the subfield context to a root of its modulus.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldContext sub, FieldContext super, Rng& rng);

  const FieldContext& sub() const { return sub_; }
  const FieldContext& super() const { return super_; }

  FieldElement embed(const FieldElement& x) const;
  /// Preimage of y, or nothing if y lies outside the embedded subfield.
  std::optional<FieldElement> project(const FieldElement& y) const;

  Polynomial embed(const Polynomial& f) const;
  std::optional<Polynomial> project(const Polynomial& f) const;

 private:
  FieldContext sub_;
  FieldContext super_;
  std::vector<FieldElement> basis_images_;  // rho^i, i < k
  Matrix transform_;                        // T with T * [rho^i coords] = [I; 0]
};

/// Factorization of an irreducible f of degree m over the subfield context
/// sub = F_{q^k}, k | m: [f_0^(0), ..., f_0^(k-1)] where f_0^(mu) has the
/// roots alpha^(q^(mu + k i)), so f_0^(mu) is f_0 with q^mu-Frobenius applied
/// to its coefficients.
std::vector<Polynomial> conjugate_factor_over_subfield(const Polynomial& f, const FieldContext& sub, Rng& rng);

}  // namespace compoz

#endif  // COMPOZ_EMBEDDING_HPP
