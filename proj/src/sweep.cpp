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

#include "compoz/sweep.hpp"

#include <numeric>
#include <stdexcept>

#include "compoz/cancellation.hpp"
#include "compoz/text_format.hpp"

namespace compoz::oracle {

void validate(const SweepConfig& config) {
  for (u64 q : config.qs) {
    if (!is_prime(q)) throw std::invalid_argument("sweep: q must be prime");
    for (auto [m, n] : config.shapes) {
      if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw std::invalid_argument("sweep: shapes must be coprime");
      u64 size = 1;
      for (int i = 0; i < std::lcm(m, n); ++i) {
        size *= q;
        if (size > config.cap) throw std::invalid_argument("sweep: q^lcm(m, n) exceeds the cap");
      }
    }
  }
  if (config.samples < 0) throw std::invalid_argument("sweep: negative sample count");
}

Rng sample_rng(u64 seed, u64 q, int m, int n, int sample) {
  std::seed_seq seq{seed, q, static_cast<u64>(m), static_cast<u64>(n), static_cast<u64>(sample)};
  return Rng(seq);
}

int SweepReport::total_disagreements() const {
  int t = 0;
  for (const auto& p : points) t += p.disagreements;
  return t;
}

int SweepReport::total_bad_witnesses() const {
  int t = 0;
  for (const auto& p : points) t += p.bad_witnesses;
  return t;
}

int SweepReport::total_criterion_failures() const {
  int t = 0;
  for (const auto& p : points) t += p.criterion_failures;
  return t;
}

SweepReport run_route_sweep(const SweepConfig& config) {
  validate(config);
  SweepReport report;
  report.config = config;
  for (u64 q : config.qs) {
    const FieldContext ctx = FieldContext::prime(q);
    for (auto [m, n] : config.shapes) {
      SweepPoint point{q, m, n, config.samples, 0, 0, 0, 0};
      for (int s = 0; s < config.samples; ++s) {
        Rng rng = sample_rng(config.seed, q, m, n, s);
        const Polynomial f = random_irreducible(ctx, m, rng);
        const Polynomial g = random_irreducible(ctx, n, rng);
        Matrix c(ctx, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < c.rows(); ++i)
          for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = ctx.random(rng);
        const PhiPoly phi(c);
        const BoundDiamond d = bind_diamond(f, g, phi, rng);

        const CcVerdict direct = cc_direct(d);
        std::map<std::string, bool> v;
        v["direct"] = direct.holds;
        v["oracle"] = cc_oracle(d).holds;
        v["matrix"] = matrix_cc_test(f, g, phi).holds;
        v["alg1"] = cc_algorithm1(f, g, phi).holds;
        v["exhaustive"] = exhaustive_cc(phi, d.alpha(0), d.beta(0));
        v["irreducible"] = is_irreducible(composed_product(d));

        bool agree = true;
        for (const auto& [name, holds] : v) agree = agree && holds == direct.holds;
        if (!agree) {
          ++point.disagreements;
          report.disagreements.push_back({q, m, n, s, {f, g, phi}, v});
        }
        if (direct.holds) {
          ++point.holds;
          if (config.keep_holding) report.holding.push_back({f, g, phi});
        } else {
          if (!direct.witness || !witness_is_violation(d, *direct.witness)) ++point.bad_witnesses;
          if (m > 1 && n > 1 && (rank_criterion(c, m, n) || degree_criterion(phi))) ++point.criterion_failures;
        }
      }
      report.points.push_back(point);
    }
  }
  return report;
}

Json to_json(const SweepReport& report) {
  Json doc = make_document("route_sweep");
  Json shapes = Json::array();
  for (auto [m, n] : report.config.shapes) shapes.push_back(Json::array({m, n}));
  doc["config"] = Json{{"qs", report.config.qs},
                       {"shapes", shapes},
                       {"samples", report.config.samples},
                       {"seed", report.config.seed},
                       {"cap", report.config.cap}};
  Json points = Json::array();
  for (const auto& p : report.points)
    points.push_back(Json{{"q", p.q},
                          {"m", p.m},
                          {"n", p.n},
                          {"samples", p.samples},
                          {"holds", p.holds},
                          {"disagreements", p.disagreements},
                          {"bad_witnesses", p.bad_witnesses},
                          {"criterion_failures", p.criterion_failures}});
  doc["points"] = std::move(points);
  Json dis = Json::array();
  for (const auto& x : report.disagreements)
    dis.push_back(Json{{"q", x.q},
                       {"m", x.m},
                       {"n", x.n},
                       {"sample", x.sample},
                       {"f", to_json(x.instance.f)},
                       {"g", to_json(x.instance.g)},
                       {"phi", to_json(x.instance.phi)},
                       {"verdicts", x.verdicts}});
  doc["disagreements"] = std::move(dis);
  doc["total_disagreements"] = report.total_disagreements();
  return doc;
}

}  // namespace compoz::oracle
