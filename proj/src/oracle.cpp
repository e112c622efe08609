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

#include "compoz/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace compoz::oracle {

namespace {

u64 checked_count(u64 q, int degree, u64 cap) {
  u64 count = 1;
  for (int i = 0; i < degree; ++i) {
    if (count > cap / q) throw std::length_error("oracle: enumeration exceeds the configured cap");
    count *= q;
  }
  return count;
}

// The index-th monic polynomial of the given degree.
Polynomial monic_at(const FieldContext& ctx, int degree, u64 index) {
  const u64 q = ctx.base_order();
  std::vector<FieldElement> c;
  for (int i = 0; i < degree; ++i) {
    c.push_back(ctx.element_at(index % q));
    index /= q;
  }
  c.push_back(ctx.one());
  return Polynomial(ctx, std::move(c));
}

FieldElement qth_power(const FieldElement& x) { return x.pow(x.context().base_order()); }

std::vector<FieldElement> conjugates_by_powering(const FieldElement& x, int count) {
  std::vector<FieldElement> out{x};
  for (int i = 1; i < count; ++i) out.push_back(qth_power(out.back()));
  return out;
}

int degree_by_powering(const FieldElement& x) {
  int r = 1;
  for (FieldElement y = qth_power(x); !(y == x); y = qth_power(y)) ++r;
  return r;
}

// Rank of a list of F_q-vectors by plain elimination.
std::size_t vector_rank(std::vector<std::vector<FieldElement>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const FieldElement inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const FieldElement factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::pair<Polynomial, int>> naive_factor(const Polynomial& f, u64 cap) {
  if (f.is_zero() || f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("naive_factor: expected monic f of degree >= 1");
  const FieldContext& ctx = f.context();
  const u64 q = ctx.base_order();
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial rest = f;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    const u64 count = checked_count(q, d, cap);
    for (u64 idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
      const Polynomial h = monic_at(ctx, d, idx);
      int mult = 0;
      for (;;) {
        auto [quot, rem] = divmod(rest, h);
        if (!rem.is_zero()) break;
        rest = quot;
        ++mult;
      }
      if (mult) out.emplace_back(h, mult);
    }
  }
  // No factor of degree <= deg/2 is left, so the rest is irreducible.
  if (rest.degree() >= 1) out.emplace_back(rest, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible_by_trial_division(const Polynomial& f, u64 cap) {
  const auto factors = naive_factor(f, cap);
  return factors.size() == 1 && factors.front().second == 1;
}

bool exhaustive_cc(const DiamondSpec& spec, const FieldElement& alpha, const FieldElement& beta) {
  const int m = spec_m(spec), n = spec_n(spec);
  const int g = std::gcd(m, n);
  const int L = m / g * n;
  if (degree_by_powering(alpha) != m || degree_by_powering(beta) != n)
    throw std::invalid_argument("exhaustive_cc: alpha, beta must have degrees m, n");
  const auto as = conjugates_by_powering(alpha, m);
  const auto bs = conjugates_by_powering(beta, n);

  std::vector<std::vector<FieldElement>> value(static_cast<std::size_t>(m), std::vector<FieldElement>(static_cast<std::size_t>(n)));
  if (const auto* phi = std::get_if<PhiPoly>(&spec)) {
    const FieldContext& ext = alpha.context();
    const Matrix& c = phi->coefficients();
    const u64 q = ext.base_order();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        FieldElement acc = ext.zero();
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < n; ++b) {
            const auto& cab = c(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            if (cab.is_zero()) continue;
            FieldElement xa = as[static_cast<std::size_t>(i)], yb = bs[static_cast<std::size_t>(j)];
            if (phi->basis() == Basis::monomial) {
              xa = xa.pow(static_cast<u64>(a));
              yb = yb.pow(static_cast<u64>(b));
            } else {
              for (int s = 0; s < a; ++s) xa = xa.pow(q);
              for (int s = 0; s < b; ++s) yb = yb.pow(q);
            }
            acc += ext.from_base(cab) * xa * yb;
          }
        value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
      }
  } else {
    // Walk each orbit from its representative (0, j0).
    const auto& table = std::get<TableDiamond>(spec);
    for (int j0 = 0; j0 < g; ++j0) {
      FieldElement v = table.values()[static_cast<std::size_t>(j0)];
      int i = 0, j = j0;
      for (int t = 0; t < L; ++t) {
        value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        v = qth_power(v);
        i = (i + 1) % m;
        j = (j + 1) % n;
      }
    }
  }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const FieldElement& base = value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k < L; k += g) {
        const int ik = (i + k) % m, jk = (j + k) % n;
        if (value[static_cast<std::size_t>(ik)][static_cast<std::size_t>(j)] == base && !(as[static_cast<std::size_t>(ik)] == as[static_cast<std::size_t>(i)]))
          return false;
        if (value[static_cast<std::size_t>(i)][static_cast<std::size_t>(jk)] == base && !(bs[static_cast<std::size_t>(jk)] == bs[static_cast<std::size_t>(j)]))
          return false;
      }
    }
  return true;
}

bool exhaustive_cc(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng) {
  const int m = f.degree(), n = g.degree();
  FieldContext ext;
  if (const auto* t = std::get_if<TableDiamond>(&spec))
    ext = t->context();
  else
    ext = random_extension(f.context(), m / std::gcd(m, n) * n, rng);
  return exhaustive_cc(spec, find_root(f, ext, rng), find_root(g, ext, rng));
}

bool is_normal(const FieldElement& gamma, int d) {
  const FieldContext& ctx = gamma.context();
  if (d < 1 || ctx.degree() % d != 0) throw std::invalid_argument("oracle::is_normal: d must divide the context degree");
  const auto conj = conjugates_by_powering(gamma, d + 1);
  if (!(conj.back() == gamma)) return false;
  std::vector<std::vector<FieldElement>> rows;
  for (int i = 0; i < d; ++i) rows.push_back(ctx.base_coordinates(conj[static_cast<std::size_t>(i)]));
  return vector_rank(std::move(rows)) == static_cast<std::size_t>(d);
}

u64 exhaustive_normal_scan(const FieldContext& ctx, u64 cap) {
  const auto order = ctx.order();
  if (!order || *order > cap) throw std::length_error("exhaustive_normal_scan: field exceeds the configured cap");
  u64 count = 0;
  for (u64 i = 0; i < *order; ++i)
    if (is_normal(ctx.element_at(i), ctx.degree())) ++count;
  return count;
}

}  // namespace compoz::oracle
