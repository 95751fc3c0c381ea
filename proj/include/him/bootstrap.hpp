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

#ifndef HIM_BOOTSTRAP_HPP
#define HIM_BOOTSTRAP_HPP

#include <utility>
#include <vector>

#include "him/cipher.hpp"
#include "him/errors.hpp"
#include "him/keys.hpp"
#include "him/log.hpp"
#include "him/numbers.hpp"
#include "him/rng.hpp"

namespace him {

/// The rational offsets subtracted during bootstrapping. Each element lies in
/// (0, 1) and the total offset stays below 2, so the mod-2 output range is
/// never trivially collapsed. An empty sequence (offset 0) is permitted as
/// the identity offset.
struct RationalSequence {
  std::vector<Rational> values;
  Rational offset;  // sum of values

  static RationalSequence from_values(std::vector<Rational> vs) {
    RationalSequence seq;
    seq.offset = 0;
    for (const Rational& v : vs) {
      if (!(v > 0 && v < 1))
        raise(ErrorCode::InvalidParams,
              "offsets: each element must lie strictly in (0, 1), got " +
                  fraction_string(v));
      seq.offset += v;
    }
    if (seq.offset >= 2)
      raise(ErrorCode::InvalidParams,
            "offsets: total " + fraction_string(seq.offset) + " must stay below 2");
    seq.values = std::move(vs);
    return seq;
  }
};

/// x mod 2 over the rationals: x - 2*floor(x/2), always in [0, 2).
inline Rational rational_mod2(const Rational& x) {
  return x - Rational(2) * Rational(floor_rational(x / 2));
}

/// Draws s+1 rationals in (0, 1) with denominators <= 10^6, then halves the
/// whole set until the offset drops below 2. Deterministic given the rng.
inline RationalSequence gen_rational_sequence(unsigned s, Rng& rng) {
  std::vector<Rational> values;
  values.reserve(s + 1);
  Rational offset = 0;
  for (unsigned t = 0; t <= s; ++t) {
    Integer den = 2 + rng.uniform_below(Integer(1000000 - 1));
    Integer num = 1 + rng.uniform_below(den - 1);
    values.emplace_back(num, den);
    offset += values.back();
  }
  while (offset >= 2) {
    for (Rational& v : values) v /= 2;
    offset /= 2;
  }
  RationalSequence seq;
  seq.values = std::move(values);
  seq.offset = std::move(offset);
  return seq;
}

/// Noise-adjustment transform: subtract the offset sum and reduce mod 2. The
/// even quotient is recorded so the transform stays exactly invertible; the
/// noise bound drops to the output-range bound 2.
inline Ciphertext bootstrap(const PublicKey& pub, const Ciphertext& ct,
                            const RationalSequence& seq) {
  if (ct.key_id != pub.key_id)
    raise(ErrorCode::KeyMismatch, "operand belongs to a different key");
  const Rational pre_mod = ct.value - seq.offset;
  const Rational quotient = Rational(2 * floor_rational(pre_mod / 2));
  Ciphertext out = ct;
  out.value = pre_mod - quotient;
  out.log.records.push_back(
      LogRecord::bootstrap(seq.offset, quotient, ct.noise_bound));
  out.noise_bound = 2;
  return out;
}

/// Exact inverse of bootstrap: pops the last Bootstrap record and restores
/// value and noise bound bit-for-bit.
inline Ciphertext unbootstrap(const Ciphertext& ct) {
  if (ct.log.records.empty() ||
      ct.log.records.back().kind != RecordKind::Bootstrap)
    raise(ErrorCode::NoBootstrapRecord,
          "last log record is not a bootstrap; nothing to revert");
  const LogRecord& rec = ct.log.records.back();
  Ciphertext out = ct;
  out.value = ct.value + rec.quotient + rec.offset;
  out.noise_bound = rec.prior_noise;
  out.log.records.pop_back();
  return out;
}

}  // namespace him

#endif  // HIM_BOOTSTRAP_HPP
