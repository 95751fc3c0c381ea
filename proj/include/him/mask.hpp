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

#ifndef HIM_MASK_HPP
#define HIM_MASK_HPP

#include <cstdint>
#include <vector>

#include "him/numbers.hpp"
#include "him/params.hpp"
#include "him/rng.hpp"

namespace him {

/// One term of the seeded mask sum. Every field is reproducible from
/// (rs1, params); x_aux is fixed to 1 so that the decryption-side subtraction
/// cancels the encryption-side sum exactly.
struct MaskTerm {
  unsigned i = 0, j = 0, k = 0;
  unsigned y_coef = 0;  // in {0, 1}
  Integer a_i0, a_j1, a_k2;
  Integer x_aux = 1;
};

struct MaskSum {
  Integer sum;  // S = sum of y_coef * a_i0 * a_j1 * a_k2
  std::vector<MaskTerm> terms;
};

/// Derives the mask sum S from the public seed. Zero mode contributes
/// nothing; Seeded mode walks (i, j, k) over [1, beta]^3 in lexicographic
/// order drawing, per tuple, y_coef as one bit and then the three a-elements
/// as delta-bit integers. The draw order is part of the wire contract.
inline MaskSum derive_mask_sum(std::uint64_t rs1, const SecurityParams& params) {
  MaskSum out;
  out.sum = 0;
  if (params.mask_mode == MaskMode::Zero) return out;
  Rng rng(rs1);
  const unsigned beta = params.beta;
  out.terms.reserve(static_cast<std::size_t>(beta) * beta * beta);
  for (unsigned i = 1; i <= beta; ++i) {
    for (unsigned j = 1; j <= beta; ++j) {
      for (unsigned k = 1; k <= beta; ++k) {
        MaskTerm term;
        term.i = i;
        term.j = j;
        term.k = k;
        term.y_coef = rng.draw_bit();
        term.a_i0 = rng.draw_bits(params.delta);
        term.a_j1 = rng.draw_bits(params.delta);
        term.a_k2 = rng.draw_bits(params.delta);
        if (term.y_coef != 0) out.sum += term.a_i0 * term.a_j1 * term.a_k2;
        out.terms.push_back(std::move(term));
      }
    }
  }
  return out;
}

}  // namespace him

#endif  // HIM_MASK_HPP
