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

#include "compoz/cancellation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "compoz/orbits.hpp"

namespace compoz {

const char* to_string(Route r) {
  switch (r) {
    case Route::direct: return "direct";
    case Route::oracle: return "oracle";
    case Route::algorithm1: return "alg1";
    case Route::matrix: return "matrix";
    case Route::exhaustive: return "exhaustive";
    case Route::bilinear: return "bilinear";
  }
  return "?";
}

const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

namespace {

CcVerdict fails(Route route, long long k, Side side, int j) { return {false, CcWitness{k, side, j}, route}; }

void require_coprime_monomial(const Polynomial& f, const Polynomial& g, const PhiPoly& phi, const char* who) {
  const std::string name(who);
  if (phi.basis() != Basis::monomial) throw std::invalid_argument(name + ": needs a monomial-basis phi");
  if (!(f.context() == phi.context()) || !(g.context() == phi.context()))
    throw std::invalid_argument(name + ": f, g and phi must share F_q");
  if (f.degree() != phi.m() || g.degree() != phi.n()) throw std::invalid_argument(name + ": coefficient matrix must be deg f x deg g");
  if (std::gcd(phi.m(), phi.n()) != 1) throw std::invalid_argument(name + ": requires gcd(m, n) = 1");
}

std::vector<int> int_prime_factors(int m) {
  std::vector<int> out;
  for (auto p : prime_factors(static_cast<u64>(m))) out.push_back(static_cast<int>(p));
  return out;
}

}  // namespace

bool witness_is_violation(const BoundDiamond& d, const CcWitness& w) {
  if (w.k % d.orbits().g != 0) return false;
  const FieldElement base = d.evaluate(0, w.j);
  if (w.side == Side::left) return d.evaluate(w.k, w.j) == base && !(d.alpha(w.k) == d.alpha(0));
  return d.evaluate(0, w.j + w.k) == base && !(d.beta(w.j + w.k) == d.beta(w.j));
}

CcVerdict cc_direct(const BoundDiamond& d) {
  const auto& orb = d.orbits();
  std::vector<FieldElement> base;
  for (const auto& rep : orb.representatives) base.push_back(d.evaluate(rep.first, rep.second));
  for (long long k = orb.g; k < orb.L; k += orb.g) {
    if (k % d.m() != 0)
      for (int j = 0; j < orb.g; ++j)
        if (d.evaluate(k, j) == base[static_cast<std::size_t>(j)]) return fails(Route::direct, k, Side::left, j);
    if (k % d.n() != 0)
      for (int j = 0; j < orb.g; ++j)
        if (d.evaluate(0, j + k) == base[static_cast<std::size_t>(j)]) return fails(Route::direct, k, Side::right, j);
  }
  return {true, std::nullopt, Route::direct};
}

CcVerdict cc_oracle(const BoundDiamond& d) {
  const auto& orb = d.orbits();
  const long long m = d.m(), n = d.n(), L = orb.L;
  for (int j = 0; j < orb.g; ++j) {
    const long long r = degree_over_base(d.evaluate(0, j));
    if (const long long ln = std::lcm(n, r); ln != L) return fails(Route::oracle, std::gcd(m, ln), Side::left, j);
    if (const long long lm = std::lcm(m, r); lm != L) return fails(Route::oracle, std::gcd(n, lm), Side::right, j);
  }
  return {true, std::nullopt, Route::oracle};
}

// ---------------------------------------------------------------------------

SubfieldTest::SubfieldTest(const Polynomial& f) : f_(f) {
  if (!f.context().is_base()) throw std::invalid_argument("SubfieldTest: f must be over F_q");
  if (!is_irreducible(f)) throw std::invalid_argument("SubfieldTest: f must be irreducible");
  const int m = f.degree();
  const u64 q = f.context().base_order();
  const Polynomial xi = Polynomial::x(f.context()) % f;
  for (int p : int_prime_factors(m)) {
    Polynomial h = xi;
    for (int s = 0; s < m / p; ++s) h = pow_mod(h, q, f);
    primes_.push_back(p);
    frob_.push_back(std::move(h));
  }
}

std::optional<int> SubfieldTest::obstruction(const std::vector<Polynomial>& us) const {
  for (const auto& u : us)
    if (!(u.context() == f_.context()) || u.degree() >= f_.degree())
      throw std::invalid_argument("SubfieldTest: inputs must be over F_q with degree < m");
  std::vector<std::size_t> alive(primes_.size());
  std::iota(alive.begin(), alive.end(), 0);
  for (const auto& u : us) {
    if (alive.empty()) break;
    std::erase_if(alive, [&](std::size_t idx) { return !(compose_mod(u, frob_[idx], f_) == u); });
  }
  if (alive.empty()) return std::nullopt;
  return primes_[alive.front()];
}

bool algorithm1_verify_extension(const Polynomial& f, const std::vector<Polynomial>& us) { return SubfieldTest(f).generates(us); }

namespace {

CcVerdict algorithm1_verdict(const SubfieldTest& tf, const SubfieldTest& tg, const PhiPoly& phi) {
  if (auto p = tf.obstruction(phi.col_polys())) return fails(Route::algorithm1, phi.m() / *p, Side::left, 0);
  if (auto p = tg.obstruction(phi.row_polys())) return fails(Route::algorithm1, phi.n() / *p, Side::right, 0);
  return {true, std::nullopt, Route::algorithm1};
}

}  // namespace

CcVerdict cc_algorithm1(const Polynomial& f, const Polynomial& g, const PhiPoly& phi) {
  require_coprime_monomial(f, g, phi, "cc_algorithm1");
  return algorithm1_verdict(SubfieldTest(f), SubfieldTest(g), phi);
}

std::vector<PhiPoly> algorithm2_sample(const Polynomial& f, const Polynomial& g, int count, Rng& rng) {
  if (count < 0) throw std::invalid_argument("algorithm2_sample: negative count");
  if (!(f.context() == g.context())) throw std::invalid_argument("algorithm2_sample: f, g over different fields");
  const int m = f.degree(), n = g.degree();
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw std::invalid_argument("algorithm2_sample: requires gcd(m, n) = 1");
  const SubfieldTest tf(f), tg(g);
  const FieldContext& ctx = f.context();
  std::vector<PhiPoly> out;
  while (static_cast<int>(out.size()) < count) {
    Matrix c(ctx, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = ctx.random(rng);
    PhiPoly phi(std::move(c));
    if (tf.generates(phi.col_polys()) && tg.generates(phi.row_polys())) out.push_back(std::move(phi));
  }
  return out;
}

// ---------------------------------------------------------------------------

FrobeniusMatrix petr_berlekamp_matrix(const Polynomial& f) {
  if (!f.context().is_base()) throw std::invalid_argument("petr_berlekamp_matrix: f must be over F_q");
  if (!is_irreducible(f)) throw std::invalid_argument("petr_berlekamp_matrix: f must be irreducible");
  const auto m = static_cast<std::size_t>(f.degree());
  const FieldContext& ctx = f.context();
  const Polynomial xq = pow_mod(Polynomial::x(ctx) % f, ctx.base_order(), f);
  Matrix a(ctx, m, m);
  Polynomial col = Polynomial::constant(ctx.one()) % f;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) a(i, j) = col.coeff(static_cast<int>(i));
    col = (col * xq) % f;
  }
  return {std::move(a), FrobeniusBasis::power};
}

FrobeniusMatrix cyclic_shift_matrix(const FieldContext& base, int m) {
  if (m < 1) throw std::invalid_argument("cyclic_shift_matrix: m must be positive");
  const auto mz = static_cast<std::size_t>(m);
  Matrix a(base, mz, mz);
  for (std::size_t i = 0; i < mz; ++i) a((i + 1) % mz, i) = base.one();
  return {std::move(a), FrobeniusBasis::normal};
}

Matrix frobenius_defect(const FrobeniusMatrix& a, u64 power, const Matrix& c) {
  const Matrix& A = a.matrix;
  return (A.pow(power) - Matrix::identity(A.context(), A.rows())) * c;
}

CcVerdict matrix_cc_test(const Polynomial& f, const Polynomial& g, const PhiPoly& phi) {
  require_coprime_monomial(f, g, phi, "matrix_cc_test");
  const int m = phi.m(), n = phi.n();
  const FrobeniusMatrix a = petr_berlekamp_matrix(f);
  for (int p : int_prime_factors(m))
    if (frobenius_defect(a, static_cast<u64>(m / p), phi.coefficients()).is_zero()) return fails(Route::matrix, m / p, Side::left, 0);
  const FrobeniusMatrix b = petr_berlekamp_matrix(g);
  const Matrix ct = phi.coefficients().transpose();
  for (int p : int_prime_factors(n))
    if (frobenius_defect(b, static_cast<u64>(n / p), ct).is_zero()) return fails(Route::matrix, n / p, Side::right, 0);
  return {true, std::nullopt, Route::matrix};
}

namespace {

void require_coprime_nontrivial(int m, int n, const char* who) {
  if (m < 2 || n < 2 || std::gcd(m, n) != 1) throw std::invalid_argument(std::string(who) + ": requires coprime m, n > 1");
}

}  // namespace

bool rank_criterion(const Matrix& c, int m, int n) {
  require_coprime_nontrivial(m, n, "rank_criterion");
  if (c.rows() != static_cast<std::size_t>(m) || c.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("rank_criterion: matrix must be m x n");
  const auto m1 = static_cast<int>(smallest_prime_factor(static_cast<u64>(m)));
  const auto n1 = static_cast<int>(smallest_prime_factor(static_cast<u64>(n)));
  return static_cast<int>(rank(c)) > std::max(m / m1, n / n1);
}

bool degree_criterion(const PhiPoly& phi) {
  if (phi.basis() != Basis::monomial) throw std::invalid_argument("degree_criterion: needs a monomial-basis phi");
  const int m = phi.m(), n = phi.n();
  require_coprime_nontrivial(m, n, "degree_criterion");
  const auto m1 = static_cast<int>(smallest_prime_factor(static_cast<u64>(m)));
  const auto n1 = static_cast<int>(smallest_prime_factor(static_cast<u64>(n)));
  const auto in_range = [](const Polynomial& h, int bound) { return h.degree() >= 1 && h.degree() < bound; };
  const auto rows = phi.row_polys();
  const auto cols = phi.col_polys();
  return std::any_of(rows.begin(), rows.end(), [&](const Polynomial& h) { return in_range(h, n1); }) &&
         std::any_of(cols.begin(), cols.end(), [&](const Polynomial& h) { return in_range(h, m1); });
}

}  // namespace compoz
