/*
 * Copyright 2026 The HIM Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HIM_PRIME_HPP
#define HIM_PRIME_HPP

#include <cstdint>
#include <vector>

#include "him/errors.hpp"
#include "him/numbers.hpp"
#include "him/rng.hpp"

namespace him {

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    std::vector<bool> sieve(256, true);
    for (std::uint32_t p = 2; p < 256; ++p) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (std::uint32_t q = p * p; q < 256; q += p) sieve[q] = false;
    }
    return out;
  }();
  return primes;
}

// Exact decision by trial division; callers keep n < 2^32 so primes below
// 2^16 suffice as divisors.
inline bool is_prime_trial(const Integer& n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) return n == d;
  }
  return true;
}

}  // namespace detail

/// Primality test: deterministic trial division below 2^16, Miller-Rabin with
/// `rounds` pseudo-random witnesses above. Witness choice is derived from the
/// candidate itself, so the test is a pure function of (n, rounds).
inline bool is_probable_prime(const Integer& n, int rounds = 40) {
  if (n < 2) return false;
  if (n < 65536) return detail::is_prime_trial(n);
  for (std::uint32_t p : detail::small_primes()) {
    if (n % p == 0) return false;
  }
  // n - 1 = 2^s * d with d odd.
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const std::uint64_t low_word =
      static_cast<std::uint64_t>(Integer(n & Integer(0xffffffffffffffffULL)));
  Rng witness_rng(low_word ^ 0x9e3779b97f4a7c15ULL);
  for (int round = 0; round < rounds; ++round) {
    Integer a = 2 + witness_rng.uniform_below(n - 3);
    Integer x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Uniformly samples delta-bit candidates until one is prime. The sampling
/// range is [2^(delta-1), 2^delta), so the result always has exactly delta
/// bits. Deterministic given the rng state.
inline Integer generate_prime(unsigned delta, Rng& rng) {
  if (delta < 2) raise(ErrorCode::InvalidParams, "delta: must be >= 2");
  const Integer low = Integer(1) << (delta - 1);
  // Prime density in the range is ~1/(delta ln 2); this bound makes a miss
  // astronomically unlikely and turns one into a loud failure.
  const std::size_t max_tries = 256 + 64 * static_cast<std::size_t>(delta);
  for (std::size_t tries = 0; tries < max_tries; ++tries) {
    Integer candidate = low | rng.draw_bits(delta - 1);
    if (is_probable_prime(candidate)) return candidate;
  }
  raise(ErrorCode::PrimeSearchExhausted,
        "no prime found in " + std::to_string(max_tries) + " candidates");
}

}  // namespace him

#endif  // HIM_PRIME_HPP
