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

#include "compoz/cancellation.hpp"
#include "test_support.hpp"

using namespace compoz;
using compoz::testing::F3Example;
using compoz::testing::poly;
using compoz::testing::random_matrix;

namespace {

// Example over F_2: f = X^2+X+1, g = X^3+X+1, phi = XY(Y+1).
struct F2Example {
  FieldContext ctx = FieldContext::prime(2);
  Polynomial f = poly(ctx, {1, 1, 1});
  Polynomial g = poly(ctx, {1, 1, 0, 1});
  PhiPoly phi{Matrix::from_rows(ctx, {{0, 0, 0}, {0, 1, 1}})};
};

}  // namespace

TEST_CASE("worked F_2 example") {
  const F2Example ex;
  Rng rng(1);
  const auto d = bind_diamond(ex.f, ex.g, ex.phi, rng);
  const auto& alpha = d.alpha(0);
  const auto& beta = d.beta(0);
  const auto one = d.context().one();
  // Weak cancellation fails: beta + 1 is not a conjugate of beta.
  CHECK(ex.phi.evaluate(alpha, beta) == ex.phi.evaluate(alpha, beta + one));
  CHECK(beta != beta + one);
  for (int j = 0; j < 3; ++j) CHECK(d.beta(j) != beta + one);
  CHECK(cc_direct(d).holds);
  CHECK(cc_oracle(d).holds);
  CHECK(cc_algorithm1(ex.f, ex.g, ex.phi).holds);
  CHECK(matrix_cc_test(ex.f, ex.g, ex.phi).holds);
  const auto prod = composed_product(d);
  CHECK(prod.degree() == 6);
  CHECK(is_irreducible(prod));
  CHECK(degree_criterion(ex.phi));
}

TEST_CASE("worked F_3 example: every route") {
  const F3Example ex;
  Rng rng(2);
  const auto dp = bind_diamond(ex.f, ex.g, ex.phi, rng);
  const auto dz = bind_diamond(ex.f, ex.g, ex.zeta, rng);
  CHECK(cc_direct(dp).holds);
  CHECK(cc_oracle(dp).holds);
  CHECK(cc_algorithm1(ex.f, ex.g, ex.phi).holds);
  CHECK(matrix_cc_test(ex.f, ex.g, ex.phi).holds);

  for (const auto& v : {cc_direct(dz), cc_oracle(dz), cc_algorithm1(ex.f, ex.g, ex.zeta), matrix_cc_test(ex.f, ex.g, ex.zeta)}) {
    CAPTURE(to_string(v.route));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->side == Side::left);
    CHECK(v.witness->k == 2);
    CHECK(witness_is_violation(dz, *v.witness));
  }
}

TEST_CASE("Petr-Berlekamp matrices of the worked example") {
  const F3Example ex;
  const auto a = petr_berlekamp_matrix(ex.f);
  const auto b = petr_berlekamp_matrix(ex.g);
  CHECK(a.basis == FrobeniusBasis::power);
  CHECK(a.matrix == Matrix::from_rows(ex.ctx, {{1, 0, 2, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}, {0, 1, 0, 0}}));
  CHECK(b.matrix == Matrix::from_rows(ex.ctx, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(frobenius_defect(a, 2, ex.phi.coefficients()) == Matrix::from_rows(ex.ctx, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(frobenius_defect(a, 2, ex.zeta.coefficients()).is_zero());
  CHECK_FALSE(frobenius_defect(b, 1, ex.phi.coefficients().transpose()).is_zero());
  CHECK(a.matrix.pow(4) == Matrix::identity(ex.ctx, 4));
  CHECK(b.matrix.pow(3) == Matrix::identity(ex.ctx, 3));
  CHECK(petr_berlekamp_matrix(poly(ex.ctx, {1, 1})).matrix == Matrix::identity(ex.ctx, 1));
}

TEST_CASE("Frobenius matrices have order m") {
  Rng rng(3);
  for (u64 p : {2, 3, 5}) {
    const auto ctx = FieldContext::prime(p);
    for (int m = 1; m <= 6; ++m) {
      const auto a = petr_berlekamp_matrix(random_irreducible(ctx, m, rng)).matrix;
      const auto id = Matrix::identity(ctx, static_cast<std::size_t>(m));
      CHECK(a.pow(static_cast<u64>(m)) == id);
      for (int d = 1; d < m; ++d) CHECK_FALSE(a.pow(static_cast<u64>(d)) == id);
      const auto s = cyclic_shift_matrix(ctx, m);
      CHECK(s.basis == FrobeniusBasis::normal);
      CHECK(s.matrix.pow(static_cast<u64>(m)) == id);
    }
  }
}

TEST_CASE("Petr-Berlekamp columns are images of powers") {
  Rng rng(4);
  const auto ctx = FieldContext::prime(3);
  const auto f = random_irreducible(ctx, 5, rng);
  const auto ext = extension_field(f);
  const auto a = petr_berlekamp_matrix(f).matrix;
  for (std::size_t j = 0; j < 5; ++j) {
    const auto image = frobenius(ext.generator().pow(j), 1);
    const auto coords = ext.base_coordinates(image);
    for (std::size_t i = 0; i < 5; ++i) CHECK(a(i, j) == coords[i]);
  }
}

TEST_CASE("subfield test") {
  const F3Example ex;
  const auto X = Polynomial::x(ex.ctx);
  const auto c = [&](u64 v) { return Polynomial::constant(ex.ctx.constant(v)); };
  CHECK(algorithm1_verify_extension(ex.f, {X * X + X, c(2), c(1)}));
  CHECK_FALSE(algorithm1_verify_extension(ex.f, {X * X, c(2), c(1)}));
  CHECK_FALSE(algorithm1_verify_extension(ex.f, {c(2), c(1)}));
  CHECK_FALSE(algorithm1_verify_extension(ex.f, {}));
  CHECK(algorithm1_verify_extension(ex.g, {X}));
  CHECK(algorithm1_verify_extension(ex.g, {c(1), X * X + c(1)}));
  CHECK_FALSE(algorithm1_verify_extension(ex.g, {c(1)}));
  CHECK(algorithm1_verify_extension(poly(ex.ctx, {1, 1}), {c(2)}));
  CHECK_THROWS_AS(algorithm1_verify_extension(ex.g, {X * X * X}), std::invalid_argument);
  CHECK_THROWS_AS(algorithm1_verify_extension(poly(ex.ctx, {2, 0, 1}), {X}), std::invalid_argument);

  const SubfieldTest t(ex.f);
  CHECK(t.obstruction({X * X}) == std::optional<int>(2));
  CHECK_FALSE(t.obstruction({X * X, X * X + X}).has_value());
}

TEST_CASE("subfield test agrees with field degrees") {
  Rng rng(5);
  for (u64 p : {2, 3})
    for (int m : {2, 4, 6, 8, 9}) {
      const auto ctx = FieldContext::prime(p);
      const auto f = random_irreducible(ctx, m, rng);
      const auto ext = extension_field(f);
      const SubfieldTest t(f);
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> us;
        const int r = 1 + static_cast<int>(uniform_below(rng, 3));
        int generated = 1;
        for (int s = 0; s < r; ++s) {
          // Half the time take a norm into a random subfield F_{q^d}.
          auto x = ext.random(rng);
          const auto divs = divisors(static_cast<u64>(m));
          const u64 d = divs[uniform_below(rng, divs.size())];
          const u64 qm = *ext.order();
          u64 qd = 1;
          for (u64 i = 0; i < d; ++i) qd *= ctx.base_order();
          if (uniform_below(rng, 2) == 0) x = x.pow((qm - 1) / (qd - 1));
          std::vector<FieldElement> coeffs = ext.base_coordinates(x);
          us.emplace_back(ctx, coeffs);
          generated = std::lcm(generated, degree_over_base(x));
        }
        CHECK(t.generates(us) == (generated == m));
      }
    }
}

TEST_CASE("rejection sampler") {
  const F3Example ex;
  Rng rng(6);
  CHECK(algorithm2_sample(ex.f, ex.g, 0, rng).empty());
  const auto sample = algorithm2_sample(ex.f, ex.g, 5, rng);
  REQUIRE(sample.size() == 5);
  for (const auto& phi : sample) {
    const auto d = bind_diamond(ex.f, ex.g, phi, rng);
    CHECK(cc_oracle(d).holds);
    CHECK(is_irreducible(composed_product(d)));
  }
  Rng r1(77), r2(77);
  const auto a = algorithm2_sample(ex.f, ex.g, 3, r1);
  const auto b = algorithm2_sample(ex.f, ex.g, 3, r2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a[i].coefficients() == b[i].coefficients());
  CHECK_THROWS_AS(algorithm2_sample(ex.f, poly(ex.ctx, {1, 0, 1, 0, 0, 0, 1}), 1, rng), std::invalid_argument);
}

TEST_CASE("matrix test edge cases") {
  const F3Example ex;
  const auto zero = matrix_cc_test(ex.f, ex.g, PhiPoly(Matrix(ex.ctx, 4, 3)));
  CHECK_FALSE(zero.holds);
  CHECK(zero.route == Route::matrix);
  CHECK_THROWS_AS(matrix_cc_test(ex.f, ex.g, PhiPoly(Matrix(ex.ctx, 3, 4))), std::invalid_argument);
}

TEST_CASE("sufficient criteria") {
  const F3Example ex;
  CHECK(rank_criterion(Matrix::from_rows(ex.ctx, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), 4, 3));
  CHECK_FALSE(rank_criterion(ex.phi.coefficients(), 4, 3));
  CHECK_FALSE(rank_criterion(Matrix(ex.ctx, 4, 3), 4, 3));
  CHECK_THROWS_AS(rank_criterion(Matrix(ex.ctx, 2, 4), 2, 4), std::invalid_argument);

  const F2Example ex2;
  CHECK(degree_criterion(ex2.phi));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 5}, {5, 7}, {9, 4}}) {
    Matrix c(ex.ctx, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    c(1, 1) = ex.ctx.one();
    CHECK(degree_criterion(PhiPoly(c)));
    Matrix top(ex.ctx, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    top(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(n - 1)) = ex.ctx.one();
    if (m - 1 >= static_cast<int>(smallest_prime_factor(static_cast<u64>(m)))) CHECK_FALSE(degree_criterion(PhiPoly(top)));
  }
}

TEST_CASE("routes agree and sufficient criteria are sound") {
  Rng rng(7);
  for (u64 p : {2, 3})
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 4}, {2, 5}}) {
      const auto ctx = FieldContext::prime(p);
      const auto f = random_irreducible(ctx, m, rng);
      const auto g = random_irreducible(ctx, n, rng);
      for (int trial = 0; trial < 40; ++trial) {
        // Sparse matrices fail more often, which exercises the witnesses.
        Matrix c = random_matrix(ctx, m, n, rng);
        if (trial % 2)
          for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
              if (uniform_below(rng, 3)) c(i, j) = ctx.zero();
        const PhiPoly phi(c);
        const auto d = bind_diamond(f, g, phi, rng);
        const auto direct = cc_direct(d);
        const auto verdicts = {cc_oracle(d), cc_algorithm1(f, g, phi), matrix_cc_test(f, g, phi)};
        for (const auto& v : verdicts) {
          CAPTURE(to_string(v.route));
          CHECK(v.holds == direct.holds);
          if (!v.holds) CHECK(witness_is_violation(d, *v.witness));
        }
        if (!direct.holds) CHECK(witness_is_violation(d, *direct.witness));
        CHECK(is_irreducible(composed_product(d)) == direct.holds);
        if (rank_criterion(c, m, n) || degree_criterion(phi)) CHECK(direct.holds);
      }
    }
}

TEST_CASE("direct witness is the smallest violation") {
  Rng rng(8);
  const auto ctx = FieldContext::prime(2);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {4, 6}, {6, 4}, {3, 6}}) {
    const auto f = random_irreducible(ctx, m, rng);
    const auto g = random_irreducible(ctx, n, rng);
    for (int trial = 0; trial < 10; ++trial) {
      const auto d = bind_diamond(f, g, PhiPoly(random_matrix(ctx, m, n, rng)), rng);
      const auto v = cc_direct(d);
      CHECK(v.holds == cc_oracle(d).holds);
      if (v.holds) continue;
      for (long long k = 0; k < v.witness->k; ++k)
        for (int j = 0; j < d.orbits().g; ++j)
          for (Side s : {Side::left, Side::right}) CHECK_FALSE(witness_is_violation(d, {k, s, j}));
    }
  }
}

TEST_CASE("coefficient polynomials decide one-sided cancellation") {
  Rng rng(9);
  const auto ctx = FieldContext::prime(2);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 3}, {6, 5}}) {
    const auto f = random_irreducible(ctx, m, rng);
    const auto g = random_irreducible(ctx, n, rng);
    for (int trial = 0; trial < 15; ++trial) {
      Matrix c = random_matrix(ctx, m, n, rng);
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
          if (uniform_below(rng, 2)) c(i, j) = ctx.zero();
      const PhiPoly phi(c);
      const auto d = bind_diamond(f, g, phi, rng);
      for (int k = 1; k < m; ++k) {
        if (m % k) continue;
        bool all_in_subfield = true;
        for (const auto& psi : phi.col_polys()) {
          const auto v = evaluate_embedded(psi, d.alpha(0));
          all_in_subfield = all_in_subfield && frobenius(v, k) == v;
        }
        CHECK((d.evaluate(k, 0) == d.evaluate(0, 0)) == all_in_subfield);
      }
    }
  }
}
