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

#include "compoz/embedding.hpp"

#include <stdexcept>

namespace compoz {

SubfieldEmbedding::SubfieldEmbedding(FieldContext sub, FieldContext super, Rng& rng)
    : sub_(std::move(sub)), super_(std::move(super)) {
  if (!(sub_.base() == super_.base())) throw std::invalid_argument("SubfieldEmbedding: different base fields");
  const int k = sub_.degree();
  const int L = super_.degree();
  if (L % k != 0) throw std::invalid_argument("SubfieldEmbedding: subfield degree does not divide extension degree");

  FieldElement rho = super_.one();
  if (k > 1) rho = find_root(Polynomial(sub_.base(), sub_.modulus()), super_, rng);
  FieldElement power = super_.one();
  for (int i = 0; i < k; ++i) {
    basis_images_.push_back(power);
    power *= rho;
  }

  // Row reduce [M | I] with M's columns the F_q coordinates of rho^i.
  const FieldContext base = super_.base();
  const auto Lz = static_cast<std::size_t>(L);
  const auto kz = static_cast<std::size_t>(k);
  Matrix aug(base, Lz, kz + Lz);
  for (std::size_t i = 0; i < kz; ++i) {
    auto coords = super_.base_coordinates(basis_images_[i]);
    for (std::size_t r = 0; r < Lz; ++r) aug(r, i) = coords[r];
  }
  for (std::size_t r = 0; r < Lz; ++r) aug(r, kz + r) = base.one();
  RowEchelon ech = row_reduce(aug);
  for (std::size_t i = 0; i < kz; ++i)
    if (ech.pivots.size() <= i || ech.pivots[i] != i)
      throw std::logic_error("SubfieldEmbedding: powers of the root are dependent");
  transform_ = Matrix(base, Lz, Lz);
  for (std::size_t r = 0; r < Lz; ++r)
    for (std::size_t c = 0; c < Lz; ++c) transform_(r, c) = ech.reduced(r, kz + c);
}

FieldElement SubfieldEmbedding::embed(const FieldElement& x) const {
  if (!(x.context() == sub_)) throw std::invalid_argument("embed: element is not in the subfield context");
  auto coords = sub_.base_coordinates(x);
  FieldElement acc = super_.zero();
  for (std::size_t i = 0; i < coords.size(); ++i) acc += super_.from_base(coords[i]) * basis_images_[i];
  return acc;
}

std::optional<FieldElement> SubfieldEmbedding::project(const FieldElement& y) const {
  if (!(y.context() == super_)) throw std::invalid_argument("project: element is not in the extension context");
  auto v = super_.base_coordinates(y);
  const std::size_t L = v.size();
  const auto k = static_cast<std::size_t>(sub_.degree());
  std::vector<FieldElement> w;
  w.reserve(L);
  for (std::size_t r = 0; r < L; ++r) {
    FieldElement acc = super_.base().zero();
    for (std::size_t c = 0; c < L; ++c) acc += transform_(r, c) * v[c];
    w.push_back(acc);
  }
  for (std::size_t r = k; r < L; ++r)
    if (!w[r].is_zero()) return std::nullopt;
  w.resize(k);
  return sub_.from_base_coordinates(w);
}

Polynomial SubfieldEmbedding::embed(const Polynomial& f) const {
  std::vector<FieldElement> c;
  for (const auto& x : f.coeffs()) c.push_back(embed(x));
  return Polynomial(super_, std::move(c));
}

std::optional<Polynomial> SubfieldEmbedding::project(const Polynomial& f) const {
  std::vector<FieldElement> c;
  for (const auto& x : f.coeffs()) {
    auto p = project(x);
    if (!p) return std::nullopt;
    c.push_back(std::move(*p));
  }
  return Polynomial(sub_, std::move(c));
}

std::vector<Polynomial> conjugate_factor_over_subfield(const Polynomial& f, const FieldContext& sub, Rng& rng) {
  if (!f.context().is_base()) throw std::invalid_argument("conjugate_factor_over_subfield: f must be over F_q");
  if (!(sub.base() == f.context())) throw std::invalid_argument("conjugate_factor_over_subfield: subfield over a different F_q");
  if (!is_irreducible(f)) throw std::invalid_argument("conjugate_factor_over_subfield: f must be monic irreducible");
  const int m = f.degree();
  const int k = sub.degree();
  if (m % k != 0) throw std::invalid_argument("conjugate_factor_over_subfield: k does not divide deg f");
  if (k == 1) return {f};

  const FieldContext super = extension_field(f);
  const FieldElement alpha = super.generator();
  const SubfieldEmbedding emb(sub, super, rng);
  std::vector<Polynomial> out;
  for (int mu = 0; mu < k; ++mu) {
    std::vector<FieldElement> roots;
    for (int i = 0; i < m / k; ++i) roots.push_back(frobenius(alpha, mu + static_cast<long long>(k) * i));
    auto projected = emb.project(from_roots(super, roots));
    if (!projected) throw std::logic_error("conjugate_factor_over_subfield: factor not defined over the subfield");
    out.push_back(std::move(*projected));
  }
  return out;
}

}  // namespace compoz
