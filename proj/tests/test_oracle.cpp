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
#include "compoz/linearized.hpp"
#include "compoz/oracle.hpp"
#include "test_support.hpp"

using namespace compoz;
using compoz::testing::F3Example;
using compoz::testing::poly;
using compoz::testing::random_matrix;

TEST_CASE("naive factorization") {
  const F3Example ex;
  Rng rng(1);
  const auto zeta_factors = oracle::naive_factor(composed_product(ex.f, ex.g, ex.zeta, rng));
  REQUIRE(zeta_factors.size() == 1);
  CHECK(zeta_factors[0].first == ex.zeta_sextic);
  CHECK(zeta_factors[0].second == 2);

  const auto irr = oracle::naive_factor(ex.f);
  REQUIRE(irr.size() == 1);
  CHECK(irr[0] == std::pair<Polynomial, int>{ex.f, 1});

  const auto split = oracle::naive_factor(poly(ex.ctx, {2, 0, 1}));  // X^2 - 1
  REQUIRE(split.size() == 2);
  CHECK(split[0] == std::pair<Polynomial, int>{poly(ex.ctx, {1, 1}), 1});
  CHECK(split[1] == std::pair<Polynomial, int>{poly(ex.ctx, {2, 1}), 1});

  CHECK_THROWS_AS(oracle::naive_factor(poly(ex.ctx, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), 10), std::length_error);
}

TEST_CASE("naive factorization reconstructs random polynomials") {
  Rng rng(2);
  for (u64 p : {2, 3, 5}) {
    const auto ctx = FieldContext::prime(p);
    for (int t = 0; t < 30; ++t) {
      const int deg = 1 + static_cast<int>(uniform_below(rng, p == 2 ? 12 : 7));
      std::vector<FieldElement> c;
      for (int i = 0; i < deg; ++i) c.push_back(ctx.random(rng));
      c.push_back(ctx.one());
      const Polynomial f(ctx, c);
      Polynomial prod = Polynomial::constant(ctx.one());
      for (const auto& [h, mult] : oracle::naive_factor(f)) {
        CHECK(is_irreducible(h));
        for (int k = 0; k < mult; ++k) prod *= h;
      }
      CHECK(prod == f);
      CHECK(oracle::is_irreducible_by_trial_division(f) == is_irreducible(f));
    }
  }
}

TEST_CASE("exhaustive cancellation on the worked example") {
  const F3Example ex;
  Rng rng(3);
  CHECK(oracle::exhaustive_cc(ex.f, ex.g, ex.phi, rng));
  CHECK_FALSE(oracle::exhaustive_cc(ex.f, ex.g, ex.zeta, rng));
}

TEST_CASE("exhaustive cancellation agrees with the direct check") {
  Rng rng(4);
  for (u64 p : {2, 3})
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {4, 2}, {3, 3}, {2, 2}}) {
      const auto ctx = FieldContext::prime(p);
      const auto f = random_irreducible(ctx, m, rng);
      const auto g = random_irreducible(ctx, n, rng);
      for (int t = 0; t < 10; ++t) {
        const PhiPoly phi(random_matrix(ctx, m, n, rng), t % 2 ? Basis::linearized : Basis::monomial);
        const auto d = bind_diamond(f, g, phi, rng);
        CHECK(oracle::exhaustive_cc(phi, d.alpha(0), d.beta(0)) == cc_direct(d).holds);
        const auto table = tabulate(d);
        CHECK(oracle::exhaustive_cc(table, d.alpha(0), d.beta(0)) == cc_direct(d).holds);
      }
    }
}

TEST_CASE("normal element counts") {
  const auto f2 = FieldContext::prime(2);
  const auto f3 = FieldContext::prime(3);
  CHECK(oracle::exhaustive_normal_scan(f2) == 1);
  CHECK(oracle::exhaustive_normal_scan(extension_field(poly(f2, {1, 1, 1}))) == 2);
  // |N_q(m)| = Phi_q(X^m - 1): the number of units of F_q[X]/(X^m - 1).
  CHECK(oracle::exhaustive_normal_scan(extension_field(poly(f2, {1, 1, 0, 1}))) == 3);
  CHECK(oracle::exhaustive_normal_scan(extension_field(poly(f3, {1, 0, 1}))) == 4);
  Rng rng(5);
  for (u64 p : {2, 3, 5})
    for (int m = 1; m <= 4; ++m) {
      const auto ext = random_extension(FieldContext::prime(p), m, rng);
      if (*ext.order() > 4096) continue;
      u64 main_count = 0;
      for (u64 i = 0; i < *ext.order(); ++i) main_count += is_normal(ext.element_at(i)) ? 1 : 0;
      const u64 count = oracle::exhaustive_normal_scan(ext);
      CHECK(count > 0);
      CHECK(count == main_count);
    }
}
