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

#include "compoz/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "compoz/polynomial.hpp"

namespace compoz {

using u128 = unsigned __int128;

u64 uniform_below(Rng& rng, u64 bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const u64 limit = std::numeric_limits<u64>::max() -
                    std::numeric_limits<u64>::max() % bound;
  for (;;) {
    u64 x = rng();
    if (x < limit) return x % bound;
  }
}

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s < a || s >= p) s -= p;
  return s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool checked_pow(u64 base, int exp, u64& out) {
  out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<u64>::max() / base) return false;
    out *= base;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                    29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// One floor of a tower: F_p when `below` is null, otherwise below[y]/(modulus).
struct Level {
  u64 p = 0;
  int degree = 1;
  std::size_t width = 1;
  std::shared_ptr<const Level> below;
  std::vector<u64> modulus;  // (degree + 1) * below->width, monic
};

namespace {

bool all_zero(const u64* a, std::size_t w) {
  return std::all_of(a, a + w, [](u64 v) { return v == 0; });
}

void level_add(const Level& L, const u64* a, const u64* b, u64* out) {
  for (std::size_t i = 0; i < L.width; ++i) out[i] = addmod(a[i], b[i], L.p);
}

void level_sub(const Level& L, const u64* a, const u64* b, u64* out) {
  for (std::size_t i = 0; i < L.width; ++i) out[i] = submod(a[i], b[i], L.p);
}

void level_mul(const Level& L, const u64* a, const u64* b, u64* out) {
  const u64 p = L.p;
  if (!L.below) {
    out[0] = mulmod(a[0], b[0], p);
    return;
  }
  const Level& B = *L.below;
  const std::size_t w = B.width;
  const int d = L.degree;
  std::vector<u64> acc(static_cast<std::size_t>(2 * d - 1) * w, 0);

  if (w == 1) {
    for (int i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < d; ++j)
        acc[i + j] = addmod(acc[i + j], mulmod(a[i], b[j], p), p);
    }
    for (int k = 2 * d - 2; k >= d; --k) {
      const u64 c = acc[k];
      if (c == 0) continue;
      for (int t = 0; t < d; ++t)
        acc[k - d + t] = submod(acc[k - d + t], mulmod(c, L.modulus[t], p), p);
      acc[k] = 0;
    }
  } else {
    std::vector<u64> tmp(w);
    for (int i = 0; i < d; ++i) {
      const u64* ai = a + i * w;
      if (all_zero(ai, w)) continue;
      for (int j = 0; j < d; ++j) {
        level_mul(B, ai, b + j * w, tmp.data());
        level_add(B, &acc[(i + j) * w], tmp.data(), &acc[(i + j) * w]);
      }
    }
    for (int k = 2 * d - 2; k >= d; --k) {
      u64* c = &acc[k * w];
      if (all_zero(c, w)) continue;
      for (int t = 0; t < d; ++t) {
        level_mul(B, c, &L.modulus[t * w], tmp.data());
        u64* dst = &acc[(k - d + t) * w];
        level_sub(B, dst, tmp.data(), dst);
      }
      std::fill(c, c + w, 0);
    }
  }
  std::copy(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(d * w), out);
}

std::vector<u64> level_one(const Level& L) {
  std::vector<u64> r(L.width, 0);
  r[0] = 1 % L.p;
  return r;
}

std::vector<u64> level_pow(const Level& L, std::vector<u64> a, u64 e) {
  std::vector<u64> r = level_one(L);
  std::vector<u64> tmp(L.width);
  while (e) {
    if (e & 1) {
      level_mul(L, r.data(), a.data(), tmp.data());
      r.swap(tmp);
    }
    e >>= 1;
    if (e) {
      level_mul(L, a.data(), a.data(), tmp.data());
      a.swap(tmp);
    }
  }
  return r;
}

// a^(|below|): raising to p once per F_p coordinate of the level below.
std::vector<u64> level_frobenius_below(const Level& L, std::vector<u64> a) {
  for (std::size_t i = 0; i < L.below->width; ++i) a = level_pow(L, std::move(a), L.p);
  return a;
}

std::vector<u64> level_inverse(const Level& L, const std::vector<u64>& a) {
  if (!L.below) return {powmod(a[0], L.p - 2, L.p)};
  // a^-1 = N(a)^-1 * prod_{i=1}^{d-1} a^(Q^i), Q = |below|, N(a) in below.
  std::vector<u64> conj = a;
  std::vector<u64> prod = level_one(L);
  std::vector<u64> tmp(L.width);
  for (int i = 1; i < L.degree; ++i) {
    conj = level_frobenius_below(L, std::move(conj));
    level_mul(L, prod.data(), conj.data(), tmp.data());
    prod.swap(tmp);
  }
  std::vector<u64> norm(L.width);
  level_mul(L, a.data(), prod.data(), norm.data());
  const std::size_t w = L.below->width;
  if (!all_zero(norm.data() + w, L.width - w))
    throw std::logic_error("field inverse: norm not in subfield (reducible modulus?)");
  std::vector<u64> ninv = level_inverse(*L.below, std::vector<u64>(norm.begin(), norm.begin() + static_cast<std::ptrdiff_t>(w)));
  std::vector<u64> embedded(L.width, 0);
  std::copy(ninv.begin(), ninv.end(), embedded.begin());
  level_mul(L, prod.data(), embedded.data(), tmp.data());
  return tmp;
}

}  // namespace
}  // namespace detail

struct FieldContext::Data {
  std::shared_ptr<const detail::Level> top;
  std::shared_ptr<const Data> base;  // null when this context is F_q
  std::vector<FieldElement> modulus;
  u64 p = 0;
  int e = 1;
  int m = 1;
};

const FieldContext::Data& FieldContext::data() const {
  if (!data_) throw std::invalid_argument("use of an empty FieldContext");
  return *data_;
}

FieldContext FieldContext::prime(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  auto level = std::make_shared<detail::Level>();
  level->p = p;
  auto d = std::make_shared<Data>();
  d->top = level;
  d->p = p;
  return FieldContext(d);
}

FieldContext FieldContext::prime_power(u64 p, const std::vector<u64>& modulus) {
  FieldContext fp = prime(p);
  if (modulus.size() < 2) throw std::invalid_argument("base modulus must have degree >= 1");
  for (u64 c : modulus)
    if (c >= p) throw std::invalid_argument("base modulus coefficient not reduced mod p");
  if (modulus.back() != 1) throw std::invalid_argument("base modulus must be monic");
  const int e = static_cast<int>(modulus.size()) - 1;
  if (e == 1) return fp;
  std::vector<FieldElement> coeffs;
  for (u64 c : modulus) coeffs.push_back(fp.constant(c));
  if (!is_irreducible(Polynomial(fp, coeffs)))
    throw std::invalid_argument("base modulus is reducible over F_" + std::to_string(p));
  u64 q;
  if (!checked_pow(p, e, q)) throw std::overflow_error("q = p^e does not fit in 64 bits");

  auto level = std::make_shared<detail::Level>();
  level->p = p;
  level->degree = e;
  level->width = static_cast<std::size_t>(e);
  level->below = fp.data().top;
  level->modulus = modulus;
  auto d = std::make_shared<Data>();
  d->top = level;
  d->p = p;
  d->e = e;
  return FieldContext(d);
}

FieldContext FieldContext::extension(const FieldContext& base, const std::vector<FieldElement>& modulus) {
  if (!base.is_base()) throw std::invalid_argument("extension: base must be F_q itself");
  if (modulus.size() < 2) throw std::invalid_argument("extension modulus must have degree >= 1");
  for (const auto& c : modulus)
    if (!(c.context() == base)) throw std::invalid_argument("extension modulus: context mismatch");
  if (!modulus.back().is_one()) throw std::invalid_argument("extension modulus must be monic");
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m == 1) return base;

  const auto& bd = base.data();
  auto level = std::make_shared<detail::Level>();
  level->p = bd.p;
  level->degree = m;
  level->width = static_cast<std::size_t>(m) * bd.top->width;
  level->below = bd.top;
  for (const auto& c : modulus) level->modulus.insert(level->modulus.end(), c.coords().begin(), c.coords().end());
  auto d = std::make_shared<Data>();
  d->top = level;
  d->base = base.data_;
  d->modulus = modulus;
  d->p = bd.p;
  d->e = bd.e;
  d->m = m;
  return FieldContext(d);
}

u64 FieldContext::characteristic() const { return data().p; }

u64 FieldContext::base_order() const {
  u64 q;
  if (!checked_pow(data().p, data().e, q)) throw std::overflow_error("q does not fit in 64 bits");
  return q;
}

int FieldContext::base_degree() const { return data().e; }
int FieldContext::degree() const { return data().m; }
std::size_t FieldContext::width() const { return data().top->width; }

std::optional<u64> FieldContext::order() const {
  u64 r;
  if (!checked_pow(data().p, static_cast<int>(width()), r)) return std::nullopt;
  return r;
}

FieldContext FieldContext::base() const {
  if (!data().base) return *this;
  return FieldContext(data().base);
}

const std::vector<FieldElement>& FieldContext::modulus() const { return data().modulus; }

FieldElement FieldContext::zero() const { return FieldElement(*this, std::vector<u64>(width(), 0)); }

FieldElement FieldContext::one() const { return constant(1); }

FieldElement FieldContext::constant(u64 v) const {
  std::vector<u64> c(width(), 0);
  c[0] = v % data().p;
  return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::element(std::vector<u64> coords) const { return FieldElement(*this, std::move(coords)); }

FieldElement FieldContext::generator() const {
  std::vector<u64> c(width(), 0);
  if (degree() > 1)
    c[static_cast<std::size_t>(data().e)] = 1;
  else if (data().e > 1)
    c[1] = 1;
  else
    c[0] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::element_at(u64 index) const {
  std::vector<u64> c(width(), 0);
  const u64 p = data().p;
  for (std::size_t i = 0; i < c.size() && index; ++i) {
    c[i] = index % p;
    index /= p;
  }
  if (index) throw std::out_of_range("element_at: index exceeds field order");
  return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::random(Rng& rng) const {
  std::vector<u64> c(width());
  for (auto& v : c) v = uniform_below(rng, data().p);
  return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::from_base(const FieldElement& x) const {
  if (!(x.context() == base())) throw std::invalid_argument("from_base: element is not in this field's base");
  std::vector<u64> c(width(), 0);
  std::copy(x.coords().begin(), x.coords().end(), c.begin());
  return FieldElement(*this, std::move(c));
}

std::optional<FieldElement> FieldContext::to_base(const FieldElement& x) const {
  if (!(x.context() == *this)) throw std::invalid_argument("to_base: context mismatch");
  const auto e = static_cast<std::size_t>(data().e);
  auto c = x.coords();
  if (!std::all_of(c.begin() + static_cast<std::ptrdiff_t>(e), c.end(), [](u64 v) { return v == 0; })) return std::nullopt;
  return FieldElement(base(), std::vector<u64>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(e)));
}

std::vector<FieldElement> FieldContext::base_coordinates(const FieldElement& x) const {
  if (!(x.context() == *this)) throw std::invalid_argument("base_coordinates: context mismatch");
  const auto e = static_cast<std::size_t>(data().e);
  const FieldContext b = base();
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(degree()));
  auto c = x.coords();
  for (int i = 0; i < degree(); ++i) {
    auto first = c.begin() + static_cast<std::ptrdiff_t>(i * e);
    out.emplace_back(b, std::vector<u64>(first, first + static_cast<std::ptrdiff_t>(e)));
  }
  return out;
}

FieldElement FieldContext::from_base_coordinates(std::span<const FieldElement> coords) const {
  if (coords.size() != static_cast<std::size_t>(degree()))
    throw std::invalid_argument("from_base_coordinates: wrong number of coordinates");
  std::vector<u64> c;
  c.reserve(width());
  const FieldContext b = base();
  for (const auto& x : coords) {
    if (!(x.context() == b)) throw std::invalid_argument("from_base_coordinates: context mismatch");
    c.insert(c.end(), x.coords().begin(), x.coords().end());
  }
  return FieldElement(*this, std::move(c));
}

std::string FieldContext::describe() const {
  std::ostringstream os;
  os << "F_" << data().p;
  if (data().e > 1) os << "^" << data().e;
  if (degree() > 1) os << " ext " << degree();
  return os.str();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldContext ctx, std::vector<u64> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (coords_.size() != ctx_.width()) throw std::invalid_argument("field element: wrong coordinate count");
  const u64 p = ctx_.characteristic();
  for (u64 v : coords_)
    if (v >= p) throw std::invalid_argument("field element: coordinate not reduced mod p");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.context().valid() || !(a.context() == b.context()))
    throw std::invalid_argument("field arithmetic: context mismatch");
}
}  // namespace

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](u64 v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](u64 v) { return v == 0; });
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const u64 p = ctx_.characteristic();
  for (auto& v : r.coords_) v = v ? p - v : 0;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  require_same(*this, b);
  detail::level_add(*ctx_.data().top, coords_.data(), b.coords_.data(), coords_.data());
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  require_same(*this, b);
  detail::level_sub(*ctx_.data().top, coords_.data(), b.coords_.data(), coords_.data());
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  require_same(*this, b);
  std::vector<u64> out(coords_.size());
  detail::level_mul(*ctx_.data().top, coords_.data(), b.coords_.data(), out.data());
  coords_.swap(out);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  require_same(*this, b);
  return *this *= b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a.coords_ == b.coords_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return std::lexicographical_compare(a.coords_.rbegin(), a.coords_.rend(), b.coords_.rbegin(), b.coords_.rend());
}

FieldElement FieldElement::pow(u64 exponent) const {
  if (!ctx_.valid()) throw std::invalid_argument("pow on empty element");
  return FieldElement(ctx_, detail::level_pow(*ctx_.data().top, coords_, exponent));
}

FieldElement FieldElement::inverse() const {
  if (!ctx_.valid()) throw std::invalid_argument("inverse on empty element");
  if (is_zero()) throw std::domain_error("division by zero in " + ctx_.describe());
  return FieldElement(ctx_, detail::level_inverse(*ctx_.data().top, coords_));
}

FieldElement frobenius(const FieldElement& a, long long k) {
  const FieldContext& ctx = a.context();
  const long long m = ctx.degree();
  long long steps = ((k % m) + m) % m;
  FieldElement r = a;
  const u64 p = ctx.characteristic();
  const int e = ctx.base_degree();
  for (long long s = 0; s < steps; ++s)
    for (int t = 0; t < e; ++t) r = r.pow(p);
  return r;
}

int degree_over_base(const FieldElement& a) {
  FieldElement c = frobenius(a, 1);
  int r = 1;
  while (!(c == a)) {
    c = frobenius(c, 1);
    ++r;
  }
  return r;
}

}  // namespace compoz
