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

#ifndef COMPOZ_ORBITS_HPP
#define COMPOZ_ORBITS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace compoz {

/// Exponent of the prime p in a >= 1.
int nu_p(std::uint64_t p, std::uint64_t a);

/// Distinct prime divisors, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t smallest_prime_factor(std::uint64_t n);

/// x mod lcm(m, n) with x = a1 (mod m), x = a2 (mod n), if one exists.
std::optional<std::uint64_t> crt_general(long long a1, std::uint64_t m, long long a2, std::uint64_t n);

/// Orbits of Z_m x Z_n under the diagonal shift (i, j) -> (i+1, j+1).
struct OrbitStructure {
  int m = 0;
  int n = 0;
  int g = 0;  // number of orbits
  int L = 0;  // common orbit length
  std::vector<std::pair<int, int>> representatives;  // (0, j), j < g
};

OrbitStructure orbit_reps(int m, int n);

/// Whether (u, v) and (i, j) lie in one orbit.
bool same_orbit(long long u, long long v, long long i, long long j, int m, int n);

/// (i, j) is the shift-th image of the representative (0, rep).
struct OrbitPosition {
  int rep = 0;
  int shift = 0;  // in [0, L)
};

OrbitPosition locate(long long i, long long j, int m, int n);

/// m = o m1 m2 and n = o n1 n2 split by comparing prime valuations: o collects
/// primes with equal valuation, m1 (n1) the primes where m (n) has the
/// strictly larger valuation, and m2 (n2) the rest.
struct CoprimeDecomposition {
  std::uint64_t o = 1, m1 = 1, m2 = 1, n1 = 1, n2 = 1;
  /// { o' n1 m1 : o' | o }, ascending.
  std::vector<std::uint64_t> admissible;
};

CoprimeDecomposition coprime_decomposition(std::uint64_t m, std::uint64_t n);

bool valuations_all_distinct(std::uint64_t m, std::uint64_t n);

}  // namespace compoz

#endif  // COMPOZ_ORBITS_HPP
