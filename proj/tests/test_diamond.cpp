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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "compoz/diamond.hpp"
#include "test_support.hpp"

using namespace compoz;
using compoz::testing::F3Example;
using compoz::testing::poly;
using compoz::testing::random_matrix;

TEST_CASE("worked F_3 example: composed products") {
  const F3Example ex;
  Rng rng(1);
  const auto prod = composed_product(ex.f, ex.g, ex.phi, rng);
  CHECK(prod == ex.phi_product);
  CHECK(is_irreducible(prod));
  const auto zprod = composed_product(ex.f, ex.g, ex.zeta, rng);
  CHECK(zprod == ex.zeta_sextic * ex.zeta_sextic);
  CHECK_FALSE(is_irreducible(zprod));
}

TEST_CASE("worked F_3 example: factor reports") {
  const F3Example ex;
  Rng rng(2);
  const auto rz = factor_report(ex.f, ex.g, ex.zeta, rng);
  REQUIRE(rz.entries.size() == 1);
  CHECK(rz.entries[0].degree == 6);
  CHECK(rz.entries[0].multiplicity == 2);
  CHECK(rz.entries[0].minimal_polynomial == ex.zeta_sextic);
  CHECK_FALSE(rz.cc_holds);
  CHECK_FALSE(rz.all_factors_max_degree);
  CHECK(rz.distinct_factor_count == 1);
  CHECK(rz.reconstruct() == ex.zeta_sextic * ex.zeta_sextic);

  const auto rp = factor_report(ex.f, ex.g, ex.phi, rng);
  REQUIRE(rp.entries.size() == 1);
  CHECK(rp.entries[0].degree == 12);
  CHECK(rp.entries[0].multiplicity == 1);
  CHECK(rp.cc_holds);
  CHECK(rp.all_factors_max_degree);
  CHECK(rp.reconstruct() == ex.phi_product);
}

TEST_CASE("linear inputs") {
  const auto f5 = FieldContext::prime(5);
  Rng rng(3);
  const PhiPoly constant(Matrix::from_rows(f5, {{3}}));
  CHECK(composed_product(poly(f5, {3, 1}), poly(f5, {4, 1}), constant, rng) == poly(f5, {2, 1}));
  // X + Y on degree-1 inputs, given by its single value a + b.
  const auto a = f5.constant(2), b = f5.constant(4);
  const TableDiamond t(1, 1, {a + b});
  CHECK(composed_product(Polynomial::linear(a), Polynomial::linear(b), t, rng) == Polynomial::linear(a + b));
}

TEST_CASE("phi = XY evaluates to products of conjugates") {
  const auto f2 = FieldContext::prime(2);
  Rng rng(4);
  const PhiPoly xy(Matrix::from_rows(f2, {{0, 0, 0}, {0, 1, 0}}));
  const auto d = bind_diamond(poly(f2, {1, 1, 1}), poly(f2, {1, 1, 0, 1}), xy, rng);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d.evaluate(i, j) == d.alpha(i) * d.beta(j));
  CHECK(d.alpha(0).pow(4) == d.alpha(0));
  CHECK(d.beta(1) == d.beta(0) * d.beta(0));
}

TEST_CASE("Frobenius equivariance and tables") {
  Rng rng(5);
  for (u64 p : {2, 3}) {
    const auto ctx = FieldContext::prime(p);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {4, 6}, {5, 3}, {6, 6}, {1, 4}}) {
      if (p == 3 && m * n > 12) continue;
      const auto f = random_irreducible(ctx, m, rng);
      const auto g = random_irreducible(ctx, n, rng);
      for (Basis basis : {Basis::monomial, Basis::linearized})
        for (int trial = 0; trial < 3; ++trial) {
          CAPTURE(p);
          CAPTURE(m);
          CAPTURE(n);
          const PhiPoly phi(random_matrix(ctx, m, n, rng), basis);
          const auto d = bind_diamond(f, g, phi, rng);
          const BoundDiamond t(tabulate(d), d.alpha(0), d.beta(0));
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
              const auto v = d.evaluate(i, j);
              CHECK(d.evaluate(i + 1, j + 1) == frobenius(v, 1));
              CHECK(t.evaluate(i, j) == v);
              CHECK(t.evaluate(i + 1, j + 1) == frobenius(t.evaluate(i, j), 1));
            }
          CHECK(composed_product(t) == composed_product(d));
        }
    }
  }
}

TEST_CASE("table values are validated") {
  const auto f2 = FieldContext::prime(2);
  Rng rng(6);
  const auto ext = random_extension(f2, 12, rng);
  // (m, n) = (2, 3) needs values in F_{2^6}; a generator of F_{2^12} is not.
  const auto outside = find_root(random_irreducible(f2, 12, rng), ext, rng);
  CHECK_THROWS_AS(TableDiamond(2, 3, {outside}), std::invalid_argument);
  CHECK_NOTHROW(TableDiamond(2, 3, {outside.pow(65)}));  // 2^12 - 1 = 65 * 63
  CHECK_THROWS_AS(TableDiamond(4, 6, {ext.one()}), std::invalid_argument);
  CHECK_THROWS_AS(TableDiamond(2, 5, {ext.one()}), std::invalid_argument);
}

TEST_CASE("root choice does not change the composed product") {
  Rng rng(7);
  struct Case {
    u64 p;
    int m, n;
  };
  for (auto c : {Case{2, 2, 3}, Case{2, 3, 4}, Case{3, 2, 3}, Case{2, 2, 4}, Case{2, 4, 6}}) {
    const auto ctx = FieldContext::prime(c.p);
    const auto f = random_irreducible(ctx, c.m, rng);
    const auto g = random_irreducible(ctx, c.n, rng);
    for (Basis basis : {Basis::monomial, Basis::linearized}) {
      const PhiPoly phi(random_matrix(ctx, c.m, c.n, rng), basis);
      const auto d = bind_diamond(f, g, phi, rng);
      const auto reference = composed_product(d);
      CHECK(reference.degree() == c.m * c.n);
      CHECK(reference.is_monic());
      for (int a = 0; a < c.m; ++a)
        for (int b = 0; b < c.n; ++b) CHECK(composed_product(BoundDiamond(phi, d.alpha(a), d.beta(b))) == reference);
    }
  }
}

TEST_CASE("factor reports reconstruct and respect the degree laws") {
  Rng rng(8);
  for (u64 p : {2, 3})
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {4, 2}, {3, 3}, {2, 6}}) {
      const auto ctx = FieldContext::prime(p);
      const auto f = random_irreducible(ctx, m, rng);
      const auto g = random_irreducible(ctx, n, rng);
      for (int trial = 0; trial < 5; ++trial) {
        const PhiPoly phi(random_matrix(ctx, m, n, rng));
        const auto d = bind_diamond(f, g, phi, rng);
        const auto r = factor_report(d);
        CHECK(r.entries.size() == static_cast<std::size_t>(std::gcd(m, n)));
        CHECK(r.reconstruct() == composed_product(d));
        int total = 0;
        for (const auto& e : r.entries) {
          CHECK(r.L % e.degree == 0);
          CHECK(e.degree * e.multiplicity == r.L);
          CHECK(is_irreducible(e.minimal_polynomial));
          total += e.degree * e.multiplicity;
        }
        CHECK(total == m * n);
        const auto fs = r.factors();
        for (std::size_t i = 1; i < fs.size(); ++i) CHECK(fs[i - 1].first < fs[i].first);
      }
    }
}

TEST_CASE("rank decomposition") {
  const F3Example ex;
  const auto rep = rank_decomposition(ex.phi);
  CHECK(rep.rank == 2);
  Rng rng(9);
  const auto ext = random_extension(ex.ctx, 5, rng);
  const auto check_reconstruction = [&](const PhiPoly& phi, const SeparatedRep& r) {
    for (int t = 0; t < 5; ++t) {
      const auto x = ext.random(rng), y = ext.random(rng);
      FieldElement acc = ext.zero();
      for (std::size_t s = 0; s < r.rank; ++s) acc += evaluate_embedded(r.u[s], x) * evaluate_embedded(r.v[s], y);
      CHECK(acc == phi.evaluate(x, y));
    }
  };
  check_reconstruction(ex.phi, rep);

  // Rank one: C = a b^T.
  const std::vector<u64> a{1, 2, 0, 1}, b{2, 0, 1};
  Matrix c(ex.ctx, 4, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = ex.ctx.constant(a[i] * b[j]);
  const auto r1 = rank_decomposition(PhiPoly(c));
  REQUIRE(r1.rank == 1);
  CHECK(r1.u[0].monic() == poly(ex.ctx, a).monic());
  CHECK(r1.v[0].monic() == poly(ex.ctx, b).monic());

  CHECK(rank_decomposition(PhiPoly(Matrix(ex.ctx, 3, 2))).rank == 0);

  for (Basis basis : {Basis::monomial, Basis::linearized})
    for (int t = 0; t < 20; ++t) {
      const PhiPoly phi(random_matrix(ex.ctx, 4, 3, rng), basis);
      const auto r = rank_decomposition(phi);
      CHECK(r.rank == rank(phi.coefficients()));
      check_reconstruction(phi, r);
      // Independence: coefficient vectors of u (and of v) have full rank.
      if (r.rank == 0) continue;
      Matrix us(ex.ctx, r.rank, 64), vs(ex.ctx, r.rank, 64);
      for (std::size_t s = 0; s < r.rank; ++s)
        for (int k = 0; k < 64; ++k) {
          us(s, static_cast<std::size_t>(k)) = r.u[s].coeff(k);
          vs(s, static_cast<std::size_t>(k)) = r.v[s].coeff(k);
        }
      CHECK(rank(us) == r.rank);
      CHECK(rank(vs) == r.rank);
    }
}

TEST_CASE("intermediate factorization") {
  const F3Example ex;
  Rng rng(10);
  const auto d = bind_diamond(ex.f, ex.g, ex.phi, rng);
  {
    const auto parts = intermediate_factorization(d, 1, 1, ex.ctx, rng);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == ex.phi_product);
  }
  {
    const auto sub = random_extension(ex.ctx, 2, rng);
    const auto parts = intermediate_factorization(d, 2, 1, sub, rng);
    REQUIRE(parts.size() == 2);
    Polynomial prod = Polynomial::constant(sub.one());
    for (const auto& h : parts) {
      CHECK(h.degree() == 6);
      CHECK(is_irreducible(h));
      prod *= h;
    }
    CHECK(prod == embed_coefficients(ex.phi_product, sub));
  }
  {
    const auto sub = random_extension(ex.ctx, 4, rng);
    const auto parts = intermediate_factorization(d, 4, 1, sub, rng);
    REQUIRE(parts.size() == 4);
    const auto& h = parts[0];
    CHECK(h.degree() == 3);
    CHECK(is_irreducible(h));
    Polynomial prod = Polynomial::constant(sub.one());
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(parts[static_cast<std::size_t>(mu)] == frobenius_coefficients(h, mu));
      prod *= frobenius_coefficients(h, mu);
    }
    CHECK(prod == embed_coefficients(ex.phi_product, sub));
    int generated = 1;
    for (const auto& c : h.coeffs()) generated = std::lcm(generated, degree_over_base(c));
    CHECK(generated == 4);
  }
  CHECK_THROWS_AS(intermediate_factorization(d, 3, 1, random_extension(ex.ctx, 3, rng), rng), std::invalid_argument);
}
