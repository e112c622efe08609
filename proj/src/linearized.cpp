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

#include "compoz/linearized.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <stdexcept>

#include "compoz/orbits.hpp"

namespace compoz {

bool is_normal(const FieldElement& gamma, int d) {
  const FieldContext& ctx = gamma.context();
  if (d < 1 || ctx.degree() % d != 0) throw std::invalid_argument("is_normal: d must divide the context degree");
  if (!(frobenius(gamma, d) == gamma)) return false;
  const auto base = ctx.base();
  Matrix rows(base, static_cast<std::size_t>(d), static_cast<std::size_t>(ctx.degree()));
  FieldElement c = gamma;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const auto coords = ctx.base_coordinates(c);
    for (std::size_t j = 0; j < rows.cols(); ++j) rows(i, j) = coords[j];
    c = frobenius(c, 1);
  }
  return rank(rows) == static_cast<std::size_t>(d);
}

bool is_normal(const FieldElement& gamma) { return is_normal(gamma, gamma.context().degree()); }

FieldElement random_normal_element(const FieldContext& ctx, Rng& rng) { return random_normal_element(ctx, ctx.degree(), rng); }

FieldElement random_normal_element(const FieldContext& ctx, int d, Rng& rng) {
  const int L = ctx.degree();
  if (d < 1 || L % d != 0) throw std::invalid_argument("random_normal_element: d must divide the context degree");
  for (;;) {
    // The trace onto F_{q^d} is uniform.
    const FieldElement y = ctx.random(rng);
    FieldElement x = y;
    for (int i = 1; i < L / d; ++i) x += frobenius(y, static_cast<long long>(d) * i);
    if (is_normal(x, d)) return x;
  }
}

bool bilinear_cc_test(const Matrix& c) {
  const std::size_t m = c.rows(), n = c.cols();
  if (m == 0 || n == 0 || std::gcd(m, n) != 1) throw std::invalid_argument("bilinear_cc_test: requires gcd(m, n) = 1");
  const auto invariant = [&](std::size_t dr, std::size_t dc) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(c((i + dr) % m, (j + dc) % n) == c(i, j))) return false;
    return true;
  };
  for (u64 p : prime_factors(m))
    if (invariant(m / p, 0)) return false;
  for (u64 p : prime_factors(n))
    if (invariant(0, n / p)) return false;
  return true;
}

std::optional<int> q_degree(const Polynomial& psi) {
  if (psi.is_zero()) return std::nullopt;
  const u64 q = psi.context().base_order();
  int top = 0;
  for (int e = 0; e <= psi.degree(); ++e) {
    if (psi.coeff(e).is_zero()) continue;
    u64 v = static_cast<u64>(e);
    int t = 0;
    while (v > 1 && v % q == 0) {
      v /= q;
      ++t;
    }
    if (v != 1) return std::nullopt;
    top = t;
  }
  return top;
}

FieldElement evaluate_q_polynomial(const std::vector<FieldElement>& coeffs, const FieldElement& x) {
  const FieldContext& ctx = x.context();
  FieldElement acc = ctx.zero();
  FieldElement power = x;
  for (const auto& a : coeffs) {
    acc += ctx.from_base(a) * power;
    power = frobenius(power, 1);
  }
  return acc;
}

bool linearized_degree_criterion(const Polynomial& psi, int m) {
  if (m < 2) throw std::invalid_argument("linearized_degree_criterion: requires m > 1");
  if (psi.is_zero()) return false;
  const auto t = q_degree(psi);
  if (!t) throw std::invalid_argument("linearized_degree_criterion: psi is not a q-polynomial");
  const int m1 = m / static_cast<int>(smallest_prime_factor(static_cast<u64>(m)));
  return *t < m - m1;
}

namespace {

void require_linearized_coprime(const PhiPoly& phi, const char* who) {
  if (phi.basis() != Basis::linearized) throw std::invalid_argument(std::string(who) + ": needs a linearized phi");
  if (std::gcd(phi.m(), phi.n()) != 1) throw std::invalid_argument(std::string(who) + ": requires gcd(m, n) = 1");
}

}  // namespace

int staircase_exponent(int i, int j, int m, int n) {
  const auto s = crt_general(i, static_cast<u64>(m), j, static_cast<u64>(n));
  if (!s) throw std::invalid_argument("staircase_exponent: requires gcd(m, n) = 1");
  return static_cast<int>(*s);
}

StaircasePoly staircase(const PhiPoly& phi) {
  require_linearized_coprime(phi, "staircase");
  const int m = phi.m(), n = phi.n();
  const Matrix& c = phi.coefficients();
  std::vector<FieldElement> e;
  for (int k = 0; k < m * n; ++k) e.push_back(c(static_cast<std::size_t>(k % m), static_cast<std::size_t>(k % n)));
  return {m, n, Polynomial(phi.context(), std::move(e))};
}

bool staircase_coprime(const StaircasePoly& s) {
  const FieldContext& ctx = s.e.context();
  const Polynomial xmn1 = Polynomial::monomial(ctx.one(), s.m * s.n) - Polynomial::constant(ctx.one());
  return gcd(s.e, xmn1).degree() == 0;
}

bool staircase_normal_test(const PhiPoly& phi) { return staircase_coprime(staircase(phi)); }

PhiPoly twisted_phi(const TwistedParams& t, const FieldContext& base) {
  if (!base.is_base() || base.base_order() != t.q) throw std::invalid_argument("twisted_phi: base field does not have q elements");
  if (t.m < 1 || t.n < 1 || std::gcd(t.m, t.n) != 1) throw std::invalid_argument("twisted_phi: requires gcd(m, n) = 1");
  if (t.k < 0 || t.k >= t.m || t.l < 0 || t.l >= t.n) throw std::invalid_argument("twisted_phi: twists out of range");
  Matrix c(base, static_cast<std::size_t>(t.m), static_cast<std::size_t>(t.n));
  c(static_cast<std::size_t>(t.k), 0) += base.one();
  if (t.sign == Sign::plus)
    c(0, static_cast<std::size_t>(t.l)) += base.one();
  else
    c(0, static_cast<std::size_t>(t.l)) -= base.one();
  return PhiPoly(std::move(c), Basis::linearized);
}

namespace {

// nu_2 with nu_2(0) = infinity.
int nu2_or_inf(int a) { return a == 0 ? std::numeric_limits<int>::max() : nu_p(2, static_cast<u64>(a)); }

}  // namespace

bool twisted_normal_predicate(const TwistedParams& t) {
  if (t.m < 1 || t.n < 1 || std::gcd(t.m, t.n) != 1) throw std::invalid_argument("twisted_normal_predicate: requires gcd(m, n) = 1");
  if (t.k < 0 || t.k >= t.m || t.l < 0 || t.l >= t.n) throw std::invalid_argument("twisted_normal_predicate: twists out of range");
  if (t.sign == Sign::minus) return false;
  if (t.q % 2 == 0) return false;
  if (t.m % 2 == 1 && t.n % 2 == 1) return true;
  if (t.m % 2 == 0) return nu_p(2, static_cast<u64>(t.m)) <= nu2_or_inf(t.k);
  return nu_p(2, static_cast<u64>(t.n)) <= nu2_or_inf(t.l);
}

bool shifted_sum_is_normal(const FieldElement& alpha, const FieldElement& beta, const FieldElement& d) {
  if (!(alpha.context() == beta.context())) throw std::invalid_argument("shifted_sum_is_normal: alpha, beta in different contexts");
  const FieldContext& ctx = alpha.context();
  if (!(d.context() == ctx.base())) throw std::invalid_argument("shifted_sum_is_normal: d must lie in F_q");
  const int m = degree_over_base(alpha), n = degree_over_base(beta);
  if (std::gcd(m, n) != 1) throw std::invalid_argument("shifted_sum_is_normal: degrees must be coprime");
  return is_normal(alpha + beta + ctx.from_base(d), m * n);
}

}  // namespace compoz
