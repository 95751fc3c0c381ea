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

#ifndef HIM_KEYS_HPP
#define HIM_KEYS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "him/digest.hpp"
#include "him/errors.hpp"
#include "him/mask.hpp"
#include "him/numbers.hpp"
#include "him/params.hpp"
#include "him/prime.hpp"
#include "him/rng.hpp"

namespace him {

/// Evaluation material. a0 alone suffices for evaluation; the even blinding
/// constant b = 2r + 2S is additionally required to encrypt, which makes the
/// scheme symmetric-capable in practice. Holding b in the "public" structure
/// is a documented security caveat of the scheme, not an oversight: anyone
/// with key material can strip the blind, and encryption is deterministic
/// per key.
struct PublicKey {
  Integer a0;              // evaluation modulus, a0 = q0 * r
  std::uint64_t rs1 = 0;   // public seed for the mask sum
  SecurityParams params;
  Integer blind;           // b = 2r + 2S, always even
  Digest key_id{};         // SHA-256 over the canonical key material
};

struct PrivateKey {
  Integer r;          // the secret prime
  Digest key_id{};    // matches the paired PublicKey
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

/// Direct key injection: accepts (r, q0) verbatim, bypassing the delta-bit
/// sampling range (the demo key uses r = 19 while delta = 4).
struct FixedKey {
  Integer r;
  Integer q0;
};

inline Digest compute_key_id(const Integer& a0, std::uint64_t rs1,
                             const SecurityParams& params, const Integer& blind) {
  std::string canonical = "him/key/v1";
  canonical += ";delta=" + std::to_string(params.delta);
  canonical += ";gamma=" + std::to_string(params.gamma);
  canonical += ";beta=" + std::to_string(params.beta);
  canonical += ";y=" + numerator(params.y).str() + "/" + denominator(params.y).str();
  canonical += ";mask=" + std::string(params.mask_mode == MaskMode::Zero ? "zero" : "seeded");
  canonical += ";dmax=" + params.d_max.str();
  canonical += ";a0=" + a0.str();
  canonical += ";rs1=" + std::to_string(rs1);
  canonical += ";blind=" + blind.str();
  return sha256(canonical);
}

/// Assembles a key pair. Draw order from `rng` is fixed: the prime r (unless
/// fixed), then q0 uniform in [1, floor(2^gamma / r)] (unless fixed), then
/// rs1. The same seed therefore always yields the same KeyPair.
inline KeyPair keygen(const SecurityParams& params, Rng& rng,
                      const std::optional<FixedKey>& fixed = std::nullopt) {
  validate_params(params);

  Integer r;
  if (fixed) {
    r = fixed->r;
    if (!is_probable_prime(r))
      raise(ErrorCode::FixedKeyInvalid, "fixed r = " + r.str() + " is not prime");
  } else {
    r = generate_prime(params.delta, rng);
  }

  const Integer q0_max = floor_div(Integer(1) << params.gamma, r);
  Integer q0;
  if (fixed) {
    q0 = fixed->q0;
    if (q0 < 1 || q0 > q0_max)
      raise(ErrorCode::FixedKeyInvalid,
            "fixed q0 = " + q0.str() + " outside [1, " + q0_max.str() + "]");
  } else {
    // q0_max >= 1 because r < 2^delta <= 2^gamma.
    q0 = 1 + rng.uniform_below(q0_max);
  }

  const Integer a0 = q0 * r;
  const std::uint64_t rs1 = rng.next_u64();
  const Integer mask_sum = derive_mask_sum(rs1, params).sum;
  const Integer blind = 2 * r + 2 * mask_sum;
  const Digest key_id = compute_key_id(a0, rs1, params, blind);

  KeyPair kp;
  kp.pub = PublicKey{a0, rs1, params, blind, key_id};
  kp.priv = PrivateKey{r, key_id};
  return kp;
}

}  // namespace him

#endif  // HIM_KEYS_HPP
