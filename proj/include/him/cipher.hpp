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

#ifndef HIM_CIPHER_HPP
#define HIM_CIPHER_HPP

#include "him/keys.hpp"
#include "him/log.hpp"
#include "him/numbers.hpp"
#include "him/params.hpp"

namespace him {

/// A ciphertext is an exact rational value plus its audit trail. The value is
/// an integer until a Bootstrap record enters the log. All operations are
/// pure: they return new Ciphertexts and never mutate their inputs.
struct Ciphertext {
  Rational value;
  Integer noise_bound;   // certified bound on the non-plaintext content
  Digest key_id{};
  TransformationLog log;
  Mode mode = Mode::Literal;
};

/// CT = d + b with b = 2r + 2S. Rejects d outside [0, d_max).
inline Ciphertext encrypt(const PublicKey& pub, const Integer& d,
                          Mode mode = Mode::Literal) {
  if (d < 0 || d >= pub.params.d_max)
    raise(ErrorCode::MessageOutOfRange,
          "plaintext " + d.str() + " outside [0, " + pub.params.d_max.str() + ")");
  Ciphertext ct;
  ct.value = Rational(d + pub.blind);
  ct.noise_bound = pub.blind;
  ct.key_id = pub.key_id;
  ct.log = TransformationLog::fresh_log();
  ct.mode = mode;
  return ct;
}

/// Recovers the tracked plaintext combination: unwinds every bootstrap,
/// restores modular reductions, and subtracts w * blind. For a fresh
/// ciphertext this is exactly CT - 2r - 2S.
inline Integer decrypt(const KeyPair& kp, const Ciphertext& ct) {
  if (ct.key_id != kp.priv.key_id || ct.key_id != kp.pub.key_id)
    raise(ErrorCode::KeyMismatch, "ciphertext was produced under a different key");
  validate_log(ct.log);
  const Rational unwound = unwind_bootstraps(ct.value, ct.log);
  const Rational adjustment = compute_adjustment(ct.log, kp.pub.blind);
  const Rational d_raw = unwound - adjustment;
  if (!is_integral(d_raw))
    raise(ErrorCode::NonIntegerDecryption,
          "adjusted value " + fraction_string(d_raw) +
              " is not an integer (unreplayed bootstrap or corrupted log)");
  Integer d = numerator(d_raw);
  if (ct.mode == Mode::Literal && d < 0)
    raise(ErrorCode::IntegrityFailure,
          "adjusted value " + d.str() + " is negative; log corrupted");
  return d;
}

/// The mod-2 channel: every blinding contribution is even, so the parity of
/// an integral ciphertext equals the parity of its plaintext combination.
inline unsigned parity(const Ciphertext& ct) {
  if (!is_integral(ct.value))
    raise(ErrorCode::NonIntegerDecryption,
          "parity needs an integral value; unbootstrap first");
  Integer residue = numerator(ct.value) % 2;
  if (residue < 0) residue += 2;
  return static_cast<unsigned>(residue);
}

}  // namespace him

#endif  // HIM_CIPHER_HPP
