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

#ifndef HIM_EVAL_HPP
#define HIM_EVAL_HPP

#include <memory>
#include <utility>

#include "him/cipher.hpp"
#include "him/keys.hpp"
#include "him/log.hpp"
#include "him/numbers.hpp"

namespace him {

namespace detail {

/// Reduction into [0, a0): returns the reduced value and the subtracted
/// multiple of a0 (negative when the input was negative).
inline std::pair<Integer, Integer> reduce_mod(const Integer& value, const Integer& a0) {
  Integer multiple = a0 * floor_div(value, a0);
  return {value - multiple, multiple};
}

inline void check_key(const PublicKey& pub, const Ciphertext& ct) {
  if (ct.key_id != pub.key_id)
    raise(ErrorCode::KeyMismatch, "operand belongs to a different key");
}

inline void check_same_mode(const Ciphertext& a, const Ciphertext& b) {
  if (a.mode != b.mode)
    raise(ErrorCode::ModeMismatch, "cannot mix Literal and Strict operands");
}

/// Strict-mode reduced arithmetic is meaningful only on integral values, so
/// operating on bootstrapped ciphertexts is rejected there.
inline void check_operable(const Ciphertext& ct) {
  if (ct.mode == Mode::Strict && has_bootstrap(ct.log))
    raise(ErrorCode::BootstrappedOperand,
          "Strict mode forbids evaluating a bootstrapped ciphertext");
}

inline void check_budget(const PublicKey& pub, const Integer& noise_in_sum,
                         const Integer& plain_slack) {
  if (noise_in_sum + plain_slack >= pub.a0)
    raise(ErrorCode::NoiseBudgetExceeded,
          "noise " + noise_in_sum.str() + " + slack " + plain_slack.str() +
              " reaches modulus " + pub.a0.str());
}

/// Applies the Strict-mode reduction to a freshly combined value and records
/// the subtracted multiple. No-op in Literal mode.
inline void finish_strict(const PublicKey& pub, Ciphertext& ct) {
  if (ct.mode != Mode::Strict) return;
  auto [reduced, multiple] = reduce_mod(numerator(ct.value), pub.a0);
  ct.value = Rational(reduced);
  ct.log.records.push_back(LogRecord::mod_reduce(multiple));
}

}  // namespace detail

/// Homomorphic addition. Literal mode adds values with no reduction; Strict
/// mode enforces the budget nb1 + nb2 + 2*d_max < a0 and reduces modulo a0
/// with the multiple recorded.
inline Ciphertext add(const PublicKey& pub, const Ciphertext& ct1, const Ciphertext& ct2) {
  detail::check_key(pub, ct1);
  detail::check_key(pub, ct2);
  detail::check_same_mode(ct1, ct2);
  detail::check_operable(ct1);
  detail::check_operable(ct2);
  if (ct1.mode == Mode::Strict)
    detail::check_budget(pub, ct1.noise_bound + ct2.noise_bound, 2 * pub.params.d_max);

  Ciphertext out = ct1;
  out.value = ct1.value + ct2.value;
  out.noise_bound = ct1.noise_bound + ct2.noise_bound;
  out.log.blind_weight = ct1.log.blind_weight + ct2.log.blind_weight;
  out.log.records.push_back(
      LogRecord::add(std::make_shared<const TransformationLog>(ct2.log)));
  detail::finish_strict(pub, out);
  return out;
}

/// Adds an unblinded plaintext constant; the blind weight is untouched.
inline Ciphertext add_plain(const PublicKey& pub, const Ciphertext& ct, const Integer& k) {
  detail::check_key(pub, ct);
  detail::check_operable(ct);
  if (ct.mode == Mode::Strict)
    detail::check_budget(pub, ct.noise_bound,
                         pub.params.d_max + (k < 0 ? Integer(-k) : k));

  Ciphertext out = ct;
  out.value = ct.value + Rational(k);
  out.log.records.push_back(LogRecord::add_plain(k));
  detail::finish_strict(pub, out);
  return out;
}

/// Scales value, blind weight, and noise bound by k >= 1.
inline Ciphertext scalar_mul(const PublicKey& pub, const Ciphertext& ct, const Integer& k) {
  if (k < 1) raise(ErrorCode::NonPositiveScalar, "scalar must be >= 1, got " + k.str());
  detail::check_key(pub, ct);
  detail::check_operable(ct);
  if (ct.mode == Mode::Strict)
    detail::check_budget(pub, k * ct.noise_bound, k * pub.params.d_max);

  Ciphertext out = ct;
  out.value = ct.value * Rational(k);
  out.noise_bound = ct.noise_bound * k;
  out.log.blind_weight = ct.log.blind_weight * k;
  out.log.records.push_back(LogRecord::scalar_mul(k));
  detail::finish_strict(pub, out);
  return out;
}

inline const Integer& noise_of(const Ciphertext& ct) { return ct.noise_bound; }

}  // namespace him

#endif  // HIM_EVAL_HPP
