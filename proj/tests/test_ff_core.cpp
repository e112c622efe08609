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

#include <stdexcept>

#include "compoz/embedding.hpp"
#include "compoz/field.hpp"
#include "compoz/polynomial.hpp"
#include "test_support.hpp"

using namespace compoz;
using compoz::testing::poly;

namespace {

FieldContext f4() { return FieldContext::prime_power(2, {1, 1, 1}); }

std::vector<FieldContext> sample_contexts() {
  const auto f2 = FieldContext::prime(2);
  const auto f3 = FieldContext::prime(3);
  const auto q4 = f4();
  return {
      f2,
      f3,
      FieldContext::prime(101),
      extension_field(poly(f2, {1, 1, 0, 1})),
      extension_field(poly(f3, {2, 0, 1, 0, 1})),
      q4,
      extension_field(Polynomial(q4, {q4.generator(), q4.zero(), q4.zero(), q4.one()})),
  };
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const auto f3 = FieldContext::prime(3);
  CHECK(f3.constant(2) + f3.constant(2) == f3.constant(1));
  CHECK(f3.constant(2) * f3.constant(2) == f3.one());
  CHECK(-f3.one() == f3.constant(2));
  CHECK_THROWS_AS(f3.one() / f3.zero(), std::domain_error);
  CHECK_THROWS_AS(f3.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(FieldContext::prime(4), std::invalid_argument);
}

TEST_CASE("context mismatch is rejected") {
  const auto a = FieldContext::prime(3);
  const auto b = FieldContext::prime(3);
  CHECK_THROWS_AS(a.one() + b.one(), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
  Rng rng(7);
  for (const auto& ctx : sample_contexts()) {
    CAPTURE(ctx.describe());
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = ctx.random(rng), b = ctx.random(rng), c = ctx.random(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == ctx.zero());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == ctx.one());
        CHECK((b / a) * a == b);
      }
      CHECK(a.pow(0) == ctx.one());
      CHECK(a.pow(3) == a * a * a);
    }
  }
}

TEST_CASE("frobenius has order m") {
  Rng rng(11);
  for (const auto& ctx : sample_contexts()) {
    CAPTURE(ctx.describe());
    const int m = ctx.degree();
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = ctx.random(rng);
      CHECK(frobenius(a, 0) == a);
      CHECK(frobenius(a, m) == a);
      CHECK(frobenius(frobenius(a, 1), 2) == frobenius(a, 3));
      CHECK(frobenius(a, -1) == frobenius(a, m - 1));
      CHECK(frobenius(a, 1) == a.pow(ctx.base_order()));
      CHECK(frobenius(a * a, 1) == frobenius(a, 1) * frobenius(a, 1));
    }
  }
}

TEST_CASE("frobenius of a root of X^2+X+1 over F_2") {
  const auto f2 = FieldContext::prime(2);
  const auto ext = extension_field(poly(f2, {1, 1, 1}));
  const auto alpha = ext.generator();
  CHECK(frobenius(alpha, 1) == alpha + ext.one());
  CHECK(alpha * alpha == alpha + ext.one());
}

TEST_CASE("irreducibility") {
  const auto f2 = FieldContext::prime(2);
  const auto f3 = FieldContext::prime(3);
  CHECK(is_irreducible(poly(f2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(poly(f2, {1, 0, 1})));
  CHECK(is_irreducible(poly(f3, {2, 0, 1, 0, 1})));
  CHECK(is_irreducible(poly(f3, {1, 2, 0, 1})));
  CHECK_THROWS_AS(is_irreducible(poly(f3, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible(poly(f3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext::prime_power(2, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("Rabin test agrees with trial division") {
  for (u64 p : {2, 3}) {
    const auto ctx = FieldContext::prime(p);
    for (int d = 1; d <= (p == 2 ? 8 : 5); ++d)
      for (const auto& f : testing::all_monic(ctx, d)) {
        CAPTURE(d);
        CHECK(is_irreducible(f) == testing::irreducible_by_trial_division(f));
      }
  }
  // Over F_4 as well.
  const auto q4 = f4();
  for (int d = 1; d <= 4; ++d)
    for (const auto& f : testing::all_monic(q4, d)) CHECK(is_irreducible(f) == testing::irreducible_by_trial_division(f));
}

TEST_CASE("random irreducible") {
  const auto f2 = FieldContext::prime(2);
  Rng rng(2024);
  const auto lin = random_irreducible(FieldContext::prime(5), 1, rng);
  CHECK(lin.degree() == 1);
  CHECK(lin.is_monic());
  Rng r1(99), r2(99);
  const auto a = random_irreducible(f2, 6, r1);
  const auto b = random_irreducible(f2, 6, r2);
  CHECK(a.degree() == 6);
  CHECK(is_irreducible(a));
  CHECK(testing::irreducible_by_trial_division(a));
  CHECK(a == b);
}

TEST_CASE("find_root") {
  const auto f2 = FieldContext::prime(2);
  const auto f3 = FieldContext::prime(3);
  Rng rng(5);
  {
    const auto ext = random_extension(f3, 4, rng);
    const auto root = find_root(poly(f3, {1, 1}), ext, rng);  // X+1, root 2
    CHECK(root == ext.constant(2));
  }
  {
    const auto f = poly(f2, {1, 1, 1});
    const auto ext = random_extension(f2, 6, rng);
    const auto rho = find_root(f, ext, rng);
    CHECK(rho * rho + rho + ext.one() == ext.zero());
    CHECK(frobenius(rho, 1) != rho);
    CHECK_THROWS_AS(find_root(poly(f2, {1, 1, 0, 1}), random_extension(f2, 4, rng), rng), std::invalid_argument);
  }
  {
    // Beyond the scan limit: equal-degree splitting.
    const auto f = poly(f3, {2, 0, 1, 0, 1});
    const auto ext = random_extension(f3, 12, rng);
    const auto rho = find_root(f, ext, rng);
    CHECK(evaluate_embedded(f, rho).is_zero());
    for (int i = 1; i < 4; ++i) CHECK(frobenius(rho, i) != rho);
    const auto g = random_irreducible(f2, 5, rng);
    const auto ext2 = random_extension(f2, 20, rng);
    CHECK(evaluate_embedded(g, find_root(g, ext2, rng)).is_zero());
  }
}

TEST_CASE("minimal polynomial and degree over base") {
  const auto f2 = FieldContext::prime(2);
  Rng rng(3);
  const auto ext = random_extension(f2, 6, rng);
  CHECK(degree_over_base(ext.zero()) == 1);
  CHECK(minimal_polynomial(ext.one()) == poly(f2, {1, 1}));
  const auto f = poly(f2, {1, 1, 0, 1});
  const auto rho = find_root(f, ext, rng);
  CHECK(degree_over_base(rho) == 3);
  CHECK(minimal_polynomial(rho) == f);
  for (int t = 0; t < 30; ++t) {
    const auto g = ext.random(rng);
    const auto mg = minimal_polynomial(g);
    CHECK(6 % mg.degree() == 0);
    CHECK(mg.degree() == degree_over_base(g));
    CHECK(degree_over_base(frobenius(g, 1)) == degree_over_base(g));
    CHECK(evaluate_embedded(mg, g).is_zero());
    CHECK(is_irreducible(mg));
  }
}

TEST_CASE("subfield embedding round trip") {
  const auto f3 = FieldContext::prime(3);
  Rng rng(17);
  const auto sub = random_extension(f3, 2, rng);
  const auto super = random_extension(f3, 6, rng);
  const SubfieldEmbedding emb(sub, super, rng);
  for (int t = 0; t < 20; ++t) {
    const auto a = sub.random(rng), b = sub.random(rng);
    CHECK(emb.embed(a * b) == emb.embed(a) * emb.embed(b));
    CHECK(emb.embed(a + b) == emb.embed(a) + emb.embed(b));
    CHECK(*emb.project(emb.embed(a)) == a);
  }
  // A generator of the big field is not in the subfield.
  CHECK_FALSE(emb.project(find_root(random_irreducible(f3, 6, rng), super, rng)).has_value());
}

TEST_CASE("conjugate factors over a subfield") {
  const auto f3 = FieldContext::prime(3);
  Rng rng(23);
  const auto f = poly(f3, {2, 0, 1, 0, 1});
  {
    const auto parts = conjugate_factor_over_subfield(f, f3, rng);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == f);
  }
  for (int k : {2, 4}) {
    CAPTURE(k);
    const auto sub = random_extension(f3, k, rng);
    const auto parts = conjugate_factor_over_subfield(f, sub, rng);
    REQUIRE(parts.size() == static_cast<std::size_t>(k));
    Polynomial prod = Polynomial::constant(sub.one());
    for (const auto& h : parts) {
      CHECK(h.degree() == 4 / k);
      CHECK(h.is_monic());
      CHECK(is_irreducible(h));
      prod *= h;
    }
    CHECK(prod == embed_coefficients(f, sub));
    for (int mu = 1; mu < k; ++mu) CHECK(parts[mu] == frobenius_coefficients(parts[0], mu));
  }
  CHECK_THROWS_AS(conjugate_factor_over_subfield(f, random_extension(f3, 3, rng), rng), std::invalid_argument);
}
