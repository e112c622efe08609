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

#ifndef COMPOZ_SWEEP_HPP
#define COMPOZ_SWEEP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "compoz/diamond.hpp"
#include "compoz/oracle.hpp"
#include "compoz/report.hpp"

namespace compoz::oracle {

struct SweepConfig {
  std::vector<u64> qs;                       // prime field orders
  std::vector<std::pair<int, int>> shapes;   // (m, n), gcd(m, n) = 1
  int samples = 200;                         // random phi per (q, m, n)
  u64 seed = 1;
  u64 cap = kDefaultCap;                     // bound on q^lcm(m, n)
  bool keep_holding = false;                 // retain instances where cancellation holds
};

/// Throws std::invalid_argument if a shape is not coprime, a q is not prime
/// or some q^lcm(m, n) exceeds the cap.
void validate(const SweepConfig& config);

/// Rng for one sample, independent of the order samples are visited in.
Rng sample_rng(u64 seed, u64 q, int m, int n, int sample);

struct SweepInstance {
  Polynomial f;
  Polynomial g;
  PhiPoly phi;
};

/// One sample where the routes did not all agree.
struct Disagreement {
  u64 q = 0;
  int m = 0;
  int n = 0;
  int sample = 0;
  SweepInstance instance;
  std::map<std::string, bool> verdicts;
};

struct SweepPoint {
  u64 q = 0;
  int m = 0;
  int n = 0;
  int samples = 0;
  int holds = 0;
  int disagreements = 0;
  int bad_witnesses = 0;       // failing verdicts whose witness is not a violation
  int criterion_failures = 0;  // rank or degree criterion true while cancellation fails
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepPoint> points;
  std::vector<Disagreement> disagreements;
  std::vector<SweepInstance> holding;

  int total_disagreements() const;
  int total_bad_witnesses() const;
  int total_criterion_failures() const;
};

/// For each (q, m, n) and each random monomial phi with random irreducible
/// f, g: compares the direct, field-degree, matrix, subfield-test and
/// exhaustive routes with irreducibility of the composed product.
SweepReport run_route_sweep(const SweepConfig& config);

Json to_json(const SweepReport& report);

}  // namespace compoz::oracle

#endif  // COMPOZ_SWEEP_HPP
