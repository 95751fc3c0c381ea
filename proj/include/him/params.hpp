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

#ifndef HIM_PARAMS_HPP
#define HIM_PARAMS_HPP

#include "him/errors.hpp"
#include "him/numbers.hpp"

namespace him {

enum class MaskMode { Zero, Seeded };

/// Ciphertext arithmetic flavor.
///  - Literal: sums are never reduced; every intermediate stays exact.
///  - Strict: evaluation reduces modulo a0, records the subtracted multiple,
///    and enforces the noise budget against a0.
enum class Mode { Literal, Strict };

struct SecurityParams {
  unsigned delta = 32;            // bit length of the secret prime r
  unsigned gamma = 64;            // q0 is sampled from [1, 2^gamma / r]
  unsigned beta = 2;              // mask-sum index dimension
  Rational y = Rational(3, 2);    // structure parameter, constrained to (1, 2)
  MaskMode mask_mode = MaskMode::Zero;
  Integer d_max = Integer(1) << 32;  // exclusive plaintext bound

  bool operator==(const SecurityParams& other) const {
    return delta == other.delta && gamma == other.gamma && beta == other.beta &&
           y == other.y && mask_mode == other.mask_mode && d_max == other.d_max;
  }
};

/// Returns `params` unchanged when every invariant holds; otherwise raises
/// InvalidParams naming the offending field.
inline SecurityParams validate_params(const SecurityParams& params) {
  if (params.delta < 2)
    raise(ErrorCode::InvalidParams, "delta: must be >= 2 so a prime exists in the range");
  if (params.gamma < params.delta)
    raise(ErrorCode::InvalidParams,
          "gamma: 2^gamma must be >= 2^delta so q0 >= 1 exists for every sampled r");
  if (params.beta < 1)
    raise(ErrorCode::InvalidParams, "beta: must be a positive integer");
  if (!(params.y > 1 && params.y < 2))
    raise(ErrorCode::InvalidParams, "y: must lie strictly between 1 and 2");
  if (params.d_max < 1)
    raise(ErrorCode::InvalidParams, "d_max: must be >= 1");
  return params;
}

}  // namespace him

#endif  // HIM_PARAMS_HPP
