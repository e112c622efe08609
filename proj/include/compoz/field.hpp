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

#ifndef COMPOZ_FIELD_HPP
#define COMPOZ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

/**
 * @file field.hpp
 * @brief Finite field towers F_p -> F_q = F_{p^e} -> F_{q^m}.
 *
 * A FieldContext is an immutable, shareable description of one field. The
 * distinguished base field F_q is the field over which Frobenius, degrees and
 * minimal polynomials are measured. Elements are stored as flat F_p
 * coordinate vectors: coordinate i*e + t is the t-th F_p coordinate of the
 * i-th F_q coefficient with respect to the power basis of the top modulus.
 *
 * Elements of different contexts never mix implicitly. Moving an element of
 * F_q into an extension goes through FieldContext::from_base, and subfields
 * other than F_q go through SubfieldEmbedding (embedding.hpp).
 */

namespace compoz {

using u64 = std::uint64_t;
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Portable across standard libraries.
u64 uniform_below(Rng& rng, u64 bound);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

namespace detail {
struct Level;
}

class FieldElement;

class FieldContext {
 public:
  /// The prime field F_p.
  static FieldContext prime(u64 p);

  /// F_{p^e} = F_p[x]/(modulus). `modulus` lists e+1 ascending F_p
  /// coordinates and must be monic and irreducible; this base field becomes
  /// F_q for everything built on top of it.
  static FieldContext prime_power(u64 p, const std::vector<u64>& modulus);

  /// F_{q^m} = F_q[y]/(modulus) for a base context F_q. The monic modulus is
  /// given by its m+1 coefficients over F_q. Irreducibility is the caller's
  /// responsibility here; see extension_field() in polynomial.hpp for the
  /// checked variant.
  static FieldContext extension(const FieldContext& base,
                                const std::vector<FieldElement>& modulus);

  FieldContext() = default;

  u64 characteristic() const;
  /// q = |F_q|. Throws std::overflow_error if q does not fit in 64 bits.
  u64 base_order() const;
  /// e in q = p^e.
  int base_degree() const;
  /// m = [this : F_q].
  int degree() const;
  /// Number of F_p coordinates per element (e * m).
  std::size_t width() const;
  /// |this| if it fits in 64 bits.
  std::optional<u64> order() const;

  bool is_base() const { return degree() == 1; }
  bool valid() const { return data_ != nullptr; }
  /// F_q as a context of its own; returns *this for base contexts.
  FieldContext base() const;
  /// Top modulus coefficients over F_q (m+1 entries); empty for base contexts.
  const std::vector<FieldElement>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The constant v mod p.
  FieldElement constant(u64 v) const;
  /// Element with the given flat F_p coordinates (length width()).
  FieldElement element(std::vector<u64> coords) const;
  /// The adjoined root y of the top modulus (x for F_{p^e}, 1 for F_p).
  FieldElement generator() const;
  /// The index-th element in lexicographic coordinate order (base-p digits).
  FieldElement element_at(u64 index) const;
  FieldElement random(Rng& rng) const;

  /// Embeds an element of base() into this context.
  FieldElement from_base(const FieldElement& x) const;
  /// Coefficient-pattern projection onto F_q; empty if x is not in F_q.
  std::optional<FieldElement> to_base(const FieldElement& x) const;

  /// Coordinates of x over F_q as m base elements.
  std::vector<FieldElement> base_coordinates(const FieldElement& x) const;
  /// Inverse of base_coordinates.
  FieldElement from_base_coordinates(std::span<const FieldElement> coords) const;

  std::string describe() const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.data_ == b.data_;
  }

 private:
  struct Data;
  explicit FieldContext(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  const Data& data() const;

  std::shared_ptr<const Data> data_;

  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldContext ctx, std::vector<u64> coords);

  const FieldContext& context() const { return ctx_; }
  std::span<const u64> coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Lexicographic order on coordinates (highest coordinate first); only
  /// meaningful within one context, used for canonical output ordering.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  FieldElement pow(u64 exponent) const;
  /// Throws std::domain_error for zero.
  FieldElement inverse() const;

 private:
  FieldContext ctx_;
  std::vector<u64> coords_;
};

/// a^(q^k) with q = |F_q|; k may be negative and is reduced mod [ctx : F_q].
FieldElement frobenius(const FieldElement& a, long long k);

/// Smallest r >= 1 with a^(q^r) = a.
int degree_over_base(const FieldElement& a);

}  // namespace compoz

#endif  // COMPOZ_FIELD_HPP
