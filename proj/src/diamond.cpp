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

#include "compoz/diamond.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "compoz/embedding.hpp"

namespace compoz {

const char* to_string(Basis b) { return b == Basis::monomial ? "monomial" : "linearized"; }

PhiPoly::PhiPoly(Matrix coefficients, Basis basis) : c_(std::move(coefficients)), basis_(basis) {
  if (!c_.context().valid() || !c_.context().is_base()) throw std::invalid_argument("PhiPoly: coefficients must lie in F_q");
  if (c_.rows() == 0 || c_.cols() == 0) throw std::invalid_argument("PhiPoly: empty coefficient matrix");
}

Polynomial basis_polynomial(const FieldContext& ctx, const std::vector<FieldElement>& coeffs, Basis basis) {
  if (basis == Basis::monomial) return Polynomial(ctx, coeffs);
  const u64 q = ctx.base_order();
  std::vector<FieldElement> out;
  u64 e = 1;
  for (std::size_t k = 0; k < coeffs.size(); ++k, e *= q) {
    if (coeffs[k].is_zero()) continue;
    if (out.size() < e + 1) out.resize(e + 1, ctx.zero());
    out[e] = coeffs[k];
  }
  return Polynomial(ctx, std::move(out));
}

Polynomial PhiPoly::row_poly(int i) const { return basis_polynomial(context(), c_.row(static_cast<std::size_t>(i)), basis_); }
Polynomial PhiPoly::col_poly(int j) const { return basis_polynomial(context(), c_.col(static_cast<std::size_t>(j)), basis_); }

std::vector<Polynomial> PhiPoly::row_polys() const {
  std::vector<Polynomial> out;
  for (int i = 0; i < m(); ++i) out.push_back(row_poly(i));
  return out;
}

std::vector<Polynomial> PhiPoly::col_polys() const {
  std::vector<Polynomial> out;
  for (int j = 0; j < n(); ++j) out.push_back(col_poly(j));
  return out;
}

namespace {

// x^k (monomial) or x^(q^k) (linearized) for k < count.
std::vector<FieldElement> basis_powers(const FieldElement& x, int count, Basis basis) {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(count));
  FieldElement cur = basis == Basis::monomial ? x.context().one() : x;
  for (int k = 0; k < count; ++k) {
    out.push_back(cur);
    cur = basis == Basis::monomial ? cur * x : frobenius(cur, 1);
  }
  return out;
}

FieldElement bilinear_sum(const Matrix& c, const FieldContext& ext, const std::vector<FieldElement>& xs,
                          const std::vector<FieldElement>& ys) {
  FieldElement acc = ext.zero();
  for (std::size_t i = 0; i < c.rows(); ++i) {
    FieldElement row = ext.zero();
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (!c(i, j).is_zero()) row += ext.from_base(c(i, j)) * ys[j];
    acc += row * xs[i];
  }
  return acc;
}

}  // namespace

FieldElement PhiPoly::evaluate(const FieldElement& x, const FieldElement& y) const {
  if (!(x.context() == y.context())) throw std::invalid_argument("PhiPoly::evaluate: arguments in different contexts");
  if (!(x.context().base() == context())) throw std::invalid_argument("PhiPoly::evaluate: arguments not over F_q of phi");
  return bilinear_sum(c_, x.context(), basis_powers(x, m(), basis_), basis_powers(y, n(), basis_));
}

SeparatedRep rank_decomposition(const PhiPoly& phi) {
  const Matrix& c = phi.coefficients();
  const RowEchelon ech = row_reduce(c);
  SeparatedRep rep;
  rep.rank = ech.rank();
  for (std::size_t s = 0; s < rep.rank; ++s) {
    rep.u.push_back(basis_polynomial(phi.context(), c.col(ech.pivots[s]), phi.basis()));
    rep.v.push_back(basis_polynomial(phi.context(), ech.reduced.row(s), phi.basis()));
  }
  return rep;
}

// ---------------------------------------------------------------------------

TableDiamond::TableDiamond(int m, int n, std::vector<FieldElement> values) : m_(m), n_(n), values_(std::move(values)) {
  if (m < 1 || n < 1) throw std::invalid_argument("TableDiamond: m, n must be positive");
  const int g = std::gcd(m, n);
  const int L = m / g * n;
  if (static_cast<int>(values_.size()) != g) throw std::invalid_argument("TableDiamond: need one value per orbit (gcd(m,n))");
  const FieldContext& ctx = values_.front().context();
  if (ctx.degree() % L != 0) throw std::invalid_argument("TableDiamond: value field degree is not a multiple of lcm(m,n)");
  for (const auto& v : values_) {
    if (!(v.context() == ctx)) throw std::invalid_argument("TableDiamond: values in different contexts");
    if (!(frobenius(v, L) == v)) throw std::invalid_argument("TableDiamond: value outside F_{q^lcm(m,n)}");
  }
}

FieldElement TableDiamond::evaluate(long long i, long long j) const {
  const OrbitPosition pos = locate(i, j, m_, n_);
  return frobenius(values_[static_cast<std::size_t>(pos.rep)], pos.shift);
}

int spec_m(const DiamondSpec& d) {
  return std::visit([](const auto& s) { return s.m(); }, d);
}

int spec_n(const DiamondSpec& d) {
  return std::visit([](const auto& s) { return s.n(); }, d);
}

FieldContext spec_base(const DiamondSpec& d) {
  return std::visit([](const auto& s) { return s.context().base(); }, d);
}

// ---------------------------------------------------------------------------

RootBinding bind_roots(const Polynomial& f, const Polynomial& g, const FieldContext& ext, Rng& rng) {
  return {ext, find_root(f, ext, rng), find_root(g, ext, rng)};
}

namespace {

std::vector<FieldElement> conjugates(const FieldElement& x, int count) {
  std::vector<FieldElement> out{x};
  for (int i = 1; i < count; ++i) out.push_back(frobenius(out.back(), 1));
  return out;
}

long long wrap(long long i, int m) { return ((i % m) + m) % m; }

}  // namespace

BoundDiamond::BoundDiamond(DiamondSpec spec, FieldElement alpha, FieldElement beta)
    : spec_(std::move(spec)), m_(spec_m(spec_)), n_(spec_n(spec_)), orbits_(orbit_reps(m_, n_)) {
  if (!(alpha.context() == beta.context())) throw std::invalid_argument("BoundDiamond: roots in different contexts");
  const FieldContext& ext = alpha.context();
  if (!(ext.base() == spec_base(spec_))) throw std::invalid_argument("BoundDiamond: roots not over F_q of the spec");
  if (const auto* t = std::get_if<TableDiamond>(&spec_); t && !(t->context() == ext))
    throw std::invalid_argument("BoundDiamond: roots must live in the table's context");
  if (degree_over_base(alpha) != m_) throw std::invalid_argument("BoundDiamond: alpha does not have degree m");
  if (degree_over_base(beta) != n_) throw std::invalid_argument("BoundDiamond: beta does not have degree n");
  alpha_ = conjugates(alpha, m_);
  beta_ = conjugates(beta, n_);
}

const FieldElement& BoundDiamond::alpha(long long i) const { return alpha_[static_cast<std::size_t>(wrap(i, m_))]; }
const FieldElement& BoundDiamond::beta(long long j) const { return beta_[static_cast<std::size_t>(wrap(j, n_))]; }

FieldElement BoundDiamond::evaluate(long long i, long long j) const {
  if (const auto* t = std::get_if<TableDiamond>(&spec_)) return t->evaluate(i, j);
  const auto& phi = std::get<PhiPoly>(spec_);
  if (phi.basis() == Basis::monomial) return phi.evaluate(alpha(i), beta(j));
  std::vector<FieldElement> xs, ys;
  for (int a = 0; a < m_; ++a) xs.push_back(alpha(i + a));
  for (int b = 0; b < n_; ++b) ys.push_back(beta(j + b));
  return bilinear_sum(phi.coefficients(), context(), xs, ys);
}

BoundDiamond bind_diamond(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng) {
  const FieldContext base = spec_base(spec);
  if (!(f.context() == base) || !(g.context() == base)) throw std::invalid_argument("bind_diamond: f, g must be over F_q of the spec");
  if (f.degree() != spec_m(spec) || g.degree() != spec_n(spec)) throw std::invalid_argument("bind_diamond: degrees of f, g do not match the spec");
  if (!is_irreducible(f)) throw std::invalid_argument("bind_diamond: f is not irreducible");
  if (!is_irreducible(g)) throw std::invalid_argument("bind_diamond: g is not irreducible");
  const int m = f.degree(), n = g.degree();
  const int L = m / std::gcd(m, n) * n;
  FieldContext ext;
  if (const auto* t = std::get_if<TableDiamond>(&spec))
    ext = t->context();
  else
    ext = random_extension(base, L, rng);
  const RootBinding r = bind_roots(f, g, ext, rng);
  return BoundDiamond(spec, r.alpha, r.beta);
}

Polynomial composed_product(const BoundDiamond& d) {
  std::vector<FieldElement> roots;
  roots.reserve(static_cast<std::size_t>(d.m() * d.n()));
  for (int i = 0; i < d.m(); ++i)
    for (int j = 0; j < d.n(); ++j) roots.push_back(d.evaluate(i, j));
  auto projected = project_coefficients(from_roots(d.context(), roots));
  if (!projected) throw std::logic_error("composed_product: coefficient outside F_q");
  return *projected;
}

Polynomial composed_product(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng) {
  return composed_product(bind_diamond(f, g, spec, rng));
}

TableDiamond tabulate(const BoundDiamond& d) {
  std::vector<FieldElement> values;
  for (const auto& rep : d.orbits().representatives) values.push_back(d.evaluate(rep.first, rep.second));
  return TableDiamond(d.m(), d.n(), std::move(values));
}

// ---------------------------------------------------------------------------

std::vector<std::pair<Polynomial, int>> FactorReport::factors() const {
  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& e : entries) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == e.minimal_polynomial; });
    if (it == out.end())
      out.emplace_back(e.minimal_polynomial, e.multiplicity);
    else
      it->second += e.multiplicity;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Polynomial FactorReport::reconstruct() const {
  if (entries.empty()) throw std::logic_error("FactorReport::reconstruct: empty report");
  Polynomial acc = Polynomial::constant(entries.front().minimal_polynomial.context().one());
  for (const auto& [f, mult] : factors())
    for (int k = 0; k < mult; ++k) acc *= f;
  return acc;
}

FactorReport factor_report(const BoundDiamond& d) {
  FactorReport r;
  r.m = d.m();
  r.n = d.n();
  r.g = d.orbits().g;
  r.L = d.orbits().L;
  r.cc_holds = true;
  r.all_factors_max_degree = true;
  for (const auto& rep : d.orbits().representatives) {
    FactorEntry e;
    e.j = rep.second;
    e.value = d.evaluate(rep.first, rep.second);
    e.minimal_polynomial = minimal_polynomial(e.value);
    e.degree = e.minimal_polynomial.degree();
    e.multiplicity = r.L / e.degree;
    r.cc_holds = r.cc_holds && std::lcm(r.n, e.degree) == r.L && std::lcm(r.m, e.degree) == r.L;
    r.all_factors_max_degree = r.all_factors_max_degree && e.degree == r.L;
    r.entries.push_back(std::move(e));
  }
  r.distinct_factor_count = r.factors().size();
  return r;
}

FactorReport factor_report(const Polynomial& f, const Polynomial& g, const DiamondSpec& spec, Rng& rng) {
  return factor_report(bind_diamond(f, g, spec, rng));
}

std::vector<Polynomial> intermediate_factorization(const BoundDiamond& d, int k, int l, const FieldContext& sub, Rng& rng) {
  const int m = d.m(), n = d.n();
  if (std::gcd(m, n) != 1) throw std::invalid_argument("intermediate_factorization: requires gcd(m,n) = 1");
  if (k < 1 || l < 1 || m % k != 0 || n % l != 0) throw std::invalid_argument("intermediate_factorization: need k | m and l | n");
  if (!(sub.base() == d.context().base()) || sub.degree() != k * l)
    throw std::invalid_argument("intermediate_factorization: subfield context must have degree k*l over F_q");
  const SubfieldEmbedding emb(sub, d.context(), rng);
  std::vector<Polynomial> out;
  for (int mu = 0; mu < k; ++mu)
    for (int nu = 0; nu < l; ++nu) {
      std::vector<FieldElement> roots;
      for (int a = 0; a < m / k; ++a)
        for (int b = 0; b < n / l; ++b) roots.push_back(d.evaluate(mu + static_cast<long long>(k) * a, nu + static_cast<long long>(l) * b));
      auto projected = emb.project(from_roots(d.context(), roots));
      if (!projected) throw std::logic_error("intermediate_factorization: factor not defined over the subfield");
      out.push_back(std::move(*projected));
    }
  return out;
}

}  // namespace compoz
