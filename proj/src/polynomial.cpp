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

#include "compoz/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace compoz {

Polynomial::Polynomial(FieldContext ctx) : ctx_(std::move(ctx)) {}

Polynomial::Polynomial(FieldContext ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.context() == ctx_)) throw std::invalid_argument("polynomial coefficient: context mismatch");
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.context(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1, c.context().zero());
  v.back() = c;
  return Polynomial(c.context(), std::move(v));
}

Polynomial Polynomial::x(const FieldContext& ctx) { return monomial(ctx.one(), 1); }

Polynomial Polynomial::linear(const FieldElement& c) {
  return Polynomial(c.context(), {-c, c.context().one()});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ctx_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (is_monic()) return *this;
  return *this * leading().inverse();
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  if (!(x.context() == ctx_)) throw std::invalid_argument("evaluate: context mismatch");
  FieldElement acc = ctx_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

namespace {
void require_same(const Polynomial& a, const Polynomial& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("polynomial arithmetic: context mismatch");
}
}  // namespace

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  require_same(*this, b);
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), ctx_.zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  require_same(*this, b);
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), ctx_.zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& b) {
  require_same(*this, b);
  if (is_zero() || b.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElement> out(coeffs_.size() + b.coeffs_.size() - 1, ctx_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * b.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (!(c.context() == ctx_)) throw std::invalid_argument("polynomial scaling: context mismatch");
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldContext& ctx = a.context();
  if (a.degree() < b.degree() || a.is_zero()) return {Polynomial(ctx), a};
  std::vector<FieldElement> rem = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<FieldElement> quot(static_cast<std::size_t>(dq) + 1, ctx.zero());
  const FieldElement lead_inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int k = dq; k >= 0; --k) {
    const FieldElement c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int t = 0; t <= db; ++t) rem[static_cast<std::size_t>(k + t)] -= c * bc[static_cast<std::size_t>(t)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(ctx, std::move(quot)), Polynomial(ctx, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] < b.coeffs_[i]) return true;
    if (b.coeffs_[i] < a.coeffs_[i]) return false;
  }
  return false;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial pow_mod(const Polynomial& base, u64 exponent, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(modulus.context().one()) % modulus;
  Polynomial b = base % modulus;
  while (exponent) {
    if (exponent & 1) result = (result * b) % modulus;
    exponent >>= 1;
    if (exponent) b = (b * b) % modulus;
  }
  return result;
}

Polynomial field_order_power_mod(const Polynomial& h, const Polynomial& modulus) {
  const FieldContext& ctx = modulus.context();
  const u64 p = ctx.characteristic();
  Polynomial r = h % modulus;
  for (std::size_t i = 0; i < ctx.width(); ++i) r = pow_mod(r, p, modulus);
  return r;
}

Polynomial compose_mod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus) {
  Polynomial acc(modulus.context());
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    acc = (acc * b) % modulus;
    acc += Polynomial::constant(*it);
  }
  return acc % modulus;
}

Polynomial embed_coefficients(const Polynomial& f, const FieldContext& ext) {
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(ext.from_base(x));
  return Polynomial(ext, std::move(c));
}

std::optional<Polynomial> project_coefficients(const Polynomial& f) {
  const FieldContext& ctx = f.context();
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) {
    auto b = ctx.to_base(x);
    if (!b) return std::nullopt;
    c.push_back(std::move(*b));
  }
  return Polynomial(ctx.base(), std::move(c));
}

Polynomial frobenius_coefficients(const Polynomial& f, long long k) {
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(frobenius(x, k));
  return Polynomial(f.context(), std::move(c));
}

FieldElement evaluate_embedded(const Polynomial& f, const FieldElement& x) {
  const FieldContext& ext = x.context();
  FieldElement acc = ext.zero();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= x;
    acc += ext.from_base(*it);
  }
  return acc;
}

Polynomial from_roots(const FieldContext& ctx, const std::vector<FieldElement>& roots) {
  Polynomial acc = Polynomial::constant(ctx.one());
  for (const auto& r : roots) acc *= Polynomial::linear(r);
  return acc;
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
  if (f.is_zero() || f.degree() < 1 || !f.is_monic())
    throw std::invalid_argument("is_irreducible: expected a monic polynomial of degree >= 1");
  const int n = f.degree();
  if (n == 1) return true;
  const FieldContext& ctx = f.context();
  const Polynomial x = Polynomial::x(ctx) % f;
  std::vector<int> checkpoints;
  for (int r : prime_divisors(n)) checkpoints.push_back(n / r);

  Polynomial h = x;
  for (int i = 1; i <= n; ++i) {
    h = field_order_power_mod(h, f);
    if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
      if (gcd(h - x, f).degree() != 0) return false;
    }
  }
  return h == x;
}

Polynomial random_irreducible(const FieldContext& ctx, int degree, Rng& rng) {
  if (degree < 1) throw std::invalid_argument("random_irreducible: degree must be >= 1");
  for (;;) {
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i) c.push_back(ctx.random(rng));
    c.push_back(ctx.one());
    Polynomial f(ctx, std::move(c));
    if (is_irreducible(f)) return f;
  }
}

FieldContext extension_field(const Polynomial& modulus) {
  if (!modulus.context().is_base()) throw std::invalid_argument("extension_field: modulus must be over F_q");
  if (!is_irreducible(modulus)) throw std::invalid_argument("extension_field: modulus is reducible");
  return FieldContext::extension(modulus.context(), modulus.coeffs());
}

FieldContext random_extension(const FieldContext& base, int degree, Rng& rng) {
  if (degree == 1) return base.base();
  return FieldContext::extension(base.base(), random_irreducible(base.base(), degree, rng).coeffs());
}

namespace {

constexpr u64 kScanLimit = u64{1} << 16;

// One step of equal-degree splitting: a polynomial whose gcd with F separates
// the roots of F into two random halves.
Polynomial splitting_polynomial(const Polynomial& F, Rng& rng) {
  const FieldContext& ext = F.context();
  const u64 p = ext.characteristic();
  FieldElement c = ext.random(rng);
  while (c.is_zero()) c = ext.random(rng);
  const Polynomial b = Polynomial(ext, {ext.random(rng), c}) % F;
  const std::size_t s = ext.width();
  if (p == 2) {
    Polynomial acc = b, cur = b;
    for (std::size_t i = 1; i < s; ++i) {
      cur = (cur * cur) % F;
      acc += cur;
    }
    return acc;
  }
  // b^((p^s - 1)/2) = prod_i (b^((p-1)/2))^(p^i)
  Polynomial t = pow_mod(b, (p - 1) / 2, F);
  Polynomial acc = t, cur = t;
  for (std::size_t i = 1; i < s; ++i) {
    cur = pow_mod(cur, p, F);
    acc = (acc * cur) % F;
  }
  return acc - Polynomial::constant(ext.one());
}

}  // namespace

FieldElement find_root(const Polynomial& f, const FieldContext& ext, Rng& rng) {
  if (!(f.context() == ext.base())) throw std::invalid_argument("find_root: f must be over the base of ext");
  if (!is_irreducible(f)) throw std::invalid_argument("find_root: f must be monic irreducible");
  const int m = f.degree();
  if (ext.degree() % m != 0) throw std::invalid_argument("find_root: deg f does not divide the extension degree");
  if (m == 1) return ext.from_base(-f.coeff(0));

  if (auto order = ext.order(); order && *order <= kScanLimit) {
    for (u64 i = 0; i < *order; ++i) {
      FieldElement x = ext.element_at(i);
      if (evaluate_embedded(f, x).is_zero()) return x;
    }
    throw std::logic_error("find_root: no root found by exhaustive scan");
  }

  Polynomial F = embed_coefficients(f, ext);
  while (F.degree() > 1) {
    Polynomial G = gcd(F, splitting_polynomial(F, rng));
    const int dg = G.degree();
    if (dg <= 0 || dg >= F.degree()) continue;
    F = (2 * dg <= F.degree()) ? G : (F / G).monic();
  }
  FieldElement root = -F.coeff(0);
  if (!evaluate_embedded(f, root).is_zero()) throw std::logic_error("find_root: splitting produced a non-root");
  return root;
}

Polynomial minimal_polynomial(const FieldElement& gamma) {
  std::vector<FieldElement> conj{gamma};
  FieldElement c = frobenius(gamma, 1);
  while (!(c == gamma)) {
    conj.push_back(c);
    c = frobenius(c, 1);
  }
  auto projected = project_coefficients(from_roots(gamma.context(), conj));
  if (!projected) throw std::logic_error("minimal_polynomial: coefficients outside F_q");
  return *projected;
}

}  // namespace compoz
