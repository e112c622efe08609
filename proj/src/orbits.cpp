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

#include "compoz/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace compoz {

using u64 = std::uint64_t;

int nu_p(u64 p, u64 a) {
  if (p < 2 || a == 0) throw std::invalid_argument("nu_p: need p >= 2 and a >= 1");
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> lo, hi;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

u64 smallest_prime_factor(u64 n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: n < 2");
  return prime_factors(n).front();
}

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

// Inverse of a mod m for gcd(a, m) = 1.
long long inverse_mod(long long a, long long m) {
  long long t = 0, nt = 1, r = m, nr = mod(a, m);
  while (nr) {
    const long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return mod(t, m);
}

}  // namespace

std::optional<u64> crt_general(long long a1, u64 m, long long a2, u64 n) {
  if (m == 0 || n == 0) throw std::invalid_argument("crt_general: zero modulus");
  const auto M = static_cast<long long>(m), N = static_cast<long long>(n);
  const long long g = std::gcd(M, N);
  const long long diff = mod(a2, N) - mod(a1, M);
  if (diff % g) return std::nullopt;
  // x = a1 + M t with M t = diff (mod N)
  const long long Ng = N / g;
  const long long t = Ng == 1 ? 0 : static_cast<long long>((static_cast<__int128>(mod(diff / g, Ng)) * inverse_mod(M / g, Ng)) % Ng);
  const long long L = M / g * N;
  return static_cast<u64>(mod(mod(a1, M) + M * t, L));
}

OrbitStructure orbit_reps(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("orbit_reps: m, n must be positive");
  OrbitStructure s;
  s.m = m;
  s.n = n;
  s.g = std::gcd(m, n);
  s.L = m / s.g * n;
  for (int j = 0; j < s.g; ++j) s.representatives.emplace_back(0, j);
  return s;
}

bool same_orbit(long long u, long long v, long long i, long long j, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("same_orbit: m, n must be positive");
  const long long g = std::gcd(m, n);
  return mod((u - i) - (v - j), g) == 0;
}

OrbitPosition locate(long long i, long long j, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("locate: m, n must be positive");
  const int g = std::gcd(m, n);
  OrbitPosition pos;
  pos.rep = static_cast<int>(mod(j - i, g));
  const auto t = crt_general(i, static_cast<u64>(m), j - pos.rep, static_cast<u64>(n));
  if (!t) throw std::logic_error("locate: orbit congruences are inconsistent");
  pos.shift = static_cast<int>(*t);
  return pos;
}

CoprimeDecomposition coprime_decomposition(u64 m, u64 n) {
  if (m == 0 || n == 0) throw std::invalid_argument("coprime_decomposition: m, n must be positive");
  CoprimeDecomposition d;
  auto primes = prime_factors(m);
  for (u64 p : prime_factors(n))
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  for (u64 p : primes) {
    u64 pm = 1, pn = 1;
    for (int k = nu_p(p, m); k > 0; --k) pm *= p;
    for (int k = nu_p(p, n); k > 0; --k) pn *= p;
    if (pm == pn) {
      d.o *= pm;
    } else if (pm > pn) {
      d.m1 *= pm;
      d.n2 *= pn;
    } else {
      d.n1 *= pn;
      d.m2 *= pm;
    }
  }
  for (u64 op : divisors(d.o)) d.admissible.push_back(op * d.n1 * d.m1);
  return d;
}

bool valuations_all_distinct(u64 m, u64 n) { return coprime_decomposition(m, n).o == 1; }

}  // namespace compoz
