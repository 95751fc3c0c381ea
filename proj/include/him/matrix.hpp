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

#ifndef HIM_MATRIX_HPP
#define HIM_MATRIX_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "him/bootstrap.hpp"
#include "him/cipher.hpp"
#include "him/errors.hpp"
#include "him/eval.hpp"
#include "him/numbers.hpp"

namespace him {

struct PlainMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> entries;  // row-major

  const Integer& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  Integer& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

  bool operator==(const PlainMatrix& other) const {
    return rows == other.rows && cols == other.cols && entries == other.entries;
  }
};

struct CipherMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Ciphertext> entries;  // row-major, all sharing key_id and mode

  const Ciphertext& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

inline PlainMatrix make_plain_matrix(std::size_t rows, std::size_t cols,
                                     std::vector<Integer> entries) {
  if (rows == 0 || cols == 0 || entries.size() != rows * cols)
    raise(ErrorCode::ShapeMismatch, "entry count does not match rows*cols");
  return PlainMatrix{rows, cols, std::move(entries)};
}

namespace detail {

inline void check_shape(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
  if (r1 != r2 || c1 != c2)
    raise(ErrorCode::ShapeMismatch,
          std::to_string(r1) + "x" + std::to_string(c1) + " vs " +
              std::to_string(r2) + "x" + std::to_string(c2));
}

inline std::string index_label(std::size_t idx, std::size_t cols) {
  return "(" + std::to_string(idx / cols) + "," + std::to_string(idx % cols) + ")";
}

}  // namespace detail

inline CipherMatrix encrypt_matrix(const PublicKey& pub, const PlainMatrix& m,
                                   Mode mode = Mode::Literal) {
  CipherMatrix out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.entries.reserve(m.entries.size());
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    try {
      out.entries.push_back(encrypt(pub, m.entries[i], mode));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " at entry " +
                                detail::index_label(i, m.cols));
    }
  }
  return out;
}

inline CipherMatrix add_matrices(const PublicKey& pub, const CipherMatrix& a,
                                 const CipherMatrix& b) {
  detail::check_shape(a.rows, a.cols, b.rows, b.cols);
  CipherMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  out.entries.reserve(a.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    out.entries.push_back(add(pub, a.entries[i], b.entries[i]));
  return out;
}

inline CipherMatrix add_matrices(const PublicKey& pub, const CipherMatrix& a,
                                 const PlainMatrix& b) {
  detail::check_shape(a.rows, a.cols, b.rows, b.cols);
  CipherMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  out.entries.reserve(a.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    out.entries.push_back(add_plain(pub, a.entries[i], b.entries[i]));
  return out;
}

inline CipherMatrix scalar_mul_matrix(const PublicKey& pub, const CipherMatrix& a,
                                      const Integer& k) {
  CipherMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  out.entries.reserve(a.entries.size());
  for (const Ciphertext& ct : a.entries) out.entries.push_back(scalar_mul(pub, ct, k));
  return out;
}

/// Element-wise bootstrap reusing one offset sequence across the matrix.
inline CipherMatrix bootstrap_matrix(const PublicKey& pub, const CipherMatrix& a,
                                     const RationalSequence& seq) {
  CipherMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  out.entries.reserve(a.entries.size());
  for (const Ciphertext& ct : a.entries) out.entries.push_back(bootstrap(pub, ct, seq));
  return out;
}

inline PlainMatrix decrypt_matrix(const KeyPair& kp, const CipherMatrix& a) {
  PlainMatrix out;
  out.rows = a.rows;
  out.cols = a.cols;
  out.entries.reserve(a.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    try {
      out.entries.push_back(decrypt(kp, a.entries[i]));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " at entry " +
                                detail::index_label(i, a.cols));
    }
  }
  return out;
}

/// CSV text form: one row per line, decimal integers separated by commas.
inline std::string to_csv(const PlainMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out += ',';
      out += m.at(r, c).str();
    }
    out += '\n';
  }
  return out;
}

inline PlainMatrix parse_csv(const std::string& text) {
  std::vector<Integer> entries;
  std::size_t rows = 0, cols = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t row_cols = 0;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t begin = cell.find_first_not_of(" \t");
      std::size_t end = cell.find_last_not_of(" \t");
      if (begin == std::string::npos)
        raise(ErrorCode::ParseError, "empty matrix cell");
      entries.push_back(parse_integer(cell.substr(begin, end - begin + 1)));
      ++row_cols;
    }
    if (rows == 0) {
      cols = row_cols;
    } else if (row_cols != cols) {
      raise(ErrorCode::ParseError, "ragged matrix rows in CSV");
    }
    ++rows;
  }
  if (rows == 0) raise(ErrorCode::ParseError, "empty matrix CSV");
  return make_plain_matrix(rows, cols, std::move(entries));
}

}  // namespace him

#endif  // HIM_MATRIX_HPP
