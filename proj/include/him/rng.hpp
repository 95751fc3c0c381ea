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

#ifndef HIM_RNG_HPP
#define HIM_RNG_HPP

#include <cstdint>
#include <random>

#include "him/errors.hpp"
#include "him/numbers.hpp"

namespace him {

/// Seeded deterministic generator. All sampling is built from raw mt19937_64
/// words (whose output sequence the C++ standard pins down), never from
/// std::uniform_int_distribution, so equal seeds give equal draws on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  unsigned draw_bit() { return static_cast<unsigned>(engine_() & 1u); }

  /// Uniform integer in [0, 2^nbits). Words are consumed least-significant
  /// first; the top word is masked down to the requested width.
  Integer draw_bits(std::size_t nbits) {
    if (nbits == 0) return 0;
    Integer out = 0;
    std::size_t words = (nbits + 63) / 64;
    for (std::size_t i = 0; i < words; ++i) {
      Integer word = engine_();
      out |= word << (64 * i);
    }
    out &= (Integer(1) << nbits) - 1;
    return out;
  }

  /// Uniform integer in [0, bound) by rejection sampling; bound >= 1.
  Integer uniform_below(const Integer& bound) {
    if (bound < 1) raise(ErrorCode::InvalidBounds, "uniform_below needs bound >= 1");
    if (bound == 1) return 0;
    std::size_t k = bit_length(Integer(bound - 1));
    for (;;) {
      Integer x = draw_bits(k);
      if (x < bound) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace him

#endif  // HIM_RNG_HPP
