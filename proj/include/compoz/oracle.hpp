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

#ifndef COMPOZ_ORACLE_HPP
#define COMPOZ_ORACLE_HPP

#include <utility>
#include <vector>

#include "compoz/diamond.hpp"
#include "compoz/field.hpp"
#include "compoz/polynomial.hpp"

/**
 * @file oracle.hpp
 * @brief Exhaustive reference implementations.
 *
 * These deliberately avoid the orbit, cancellation and normality code of the
 * main library and rely only on field and polynomial arithmetic, so that
 * agreement with the main routines is evidence rather than tautology.
 */

namespace compoz::oracle {

/// Default bound on the number of candidates any oracle may enumerate.
inline constexpr u64 kDefaultCap = u64{1} << 22;

/// Factorization of a monic f by trial division with every monic polynomial
/// of degree <= deg/2, ascending. Throws std::length_error if that needs more
/// than cap candidates.
std::vector<std::pair<Polynomial, int>> naive_factor(const Polynomial& f, u64 cap = kDefaultCap);

/// Irreducibility by trial division.
bool is_irreducible_by_trial_division(const Polynomial& f, u64 cap = kDefaultCap);

/// Conjugate cancellation checked literally on every conjugate pair and
/// every multiple k of gcd(m, n) in [0, lcm(m, n)). alpha and beta must have
/// degrees m and n; table specs need them in the table's context.
bool exhaustive_cc(const DiamondSpec& spec, const FieldElement& alpha, const FieldElement& beta);
/// Same, with roots of f and g found in a fresh extension (phi) or the
/// table's context.
bool exhaustive_cc(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng);

/// Rank of the d conjugates of gamma over F_q equals d, and gamma^(q^d) = gamma.
bool is_normal(const FieldElement& gamma, int d);

/// Number of normal elements of ctx over F_q, by scanning every element.
u64 exhaustive_normal_scan(const FieldContext& ctx, u64 cap = kDefaultCap);

}  // namespace compoz::oracle

#endif  // COMPOZ_ORACLE_HPP
