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

#ifndef HIM_DIGEST_HPP
#define HIM_DIGEST_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <openssl/evp.h>

#include "him/errors.hpp"

namespace him {

// 32-byte content digest used as a key identity; SHA-256 over a canonical
// encoding of the key material.
using Digest = std::array<std::uint8_t, 32>;

inline Digest sha256(std::string_view data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    raise(ErrorCode::ParseError, "SHA-256 computation failed");
  }
  return out;
}

inline std::string hex(const Digest& d) {
  static const char* alphabet = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto byte : d) {
    out += alphabet[byte >> 4];
    out += alphabet[byte & 0xf];
  }
  return out;
}

inline Digest digest_from_hex(std::string_view text) {
  if (text.size() != 64) raise(ErrorCode::ParseError, "digest must be 64 hex chars");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    raise(ErrorCode::ParseError, "invalid hex character in digest");
  };
  Digest out{};
  for (std::size_t i = 0; i < 32; ++i) {
    out[i] = static_cast<std::uint8_t>((nibble(text[2 * i]) << 4) |
                                       nibble(text[2 * i + 1]));
  }
  return out;
}

}  // namespace him

#endif  // HIM_DIGEST_HPP
