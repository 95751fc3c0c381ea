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

#ifndef HIM_LOG_HPP
#define HIM_LOG_HPP

#include <memory>
#include <span>
#include <vector>

#include "him/errors.hpp"
#include "him/numbers.hpp"

namespace him {

enum class RecordKind {
  FreshEncryption,
  Add,        // embeds the second operand's log
  AddPlain,   // operand k added to the value, no blinding carried
  ScalarMul,  // operand k >= 1
  Bootstrap,  // value' = value - offset - quotient, quotient = 2*floor((value-offset)/2)
  ModReduce,  // value' = value - multiple, multiple a signed multiple of a0
};

struct TransformationLog;

/// One tracked operation. Only the fields relevant to `kind` are meaningful;
/// the rest stay default-initialized and are not serialized.
struct LogRecord {
  RecordKind kind = RecordKind::FreshEncryption;
  Integer k;             // AddPlain / ScalarMul
  Rational offset;       // Bootstrap
  Rational quotient;     // Bootstrap; even integer-valued
  Integer prior_noise;   // Bootstrap; the noise bound it replaced
  Integer multiple;      // ModReduce
  std::shared_ptr<const TransformationLog> other;  // Add

  static LogRecord fresh() { return LogRecord{}; }
  static LogRecord add(std::shared_ptr<const TransformationLog> other_log) {
    LogRecord rec;
    rec.kind = RecordKind::Add;
    rec.other = std::move(other_log);
    return rec;
  }
  static LogRecord add_plain(Integer value) {
    LogRecord rec;
    rec.kind = RecordKind::AddPlain;
    rec.k = std::move(value);
    return rec;
  }
  static LogRecord scalar_mul(Integer factor) {
    LogRecord rec;
    rec.kind = RecordKind::ScalarMul;
    rec.k = std::move(factor);
    return rec;
  }
  static LogRecord bootstrap(Rational offset, Rational quotient, Integer prior_noise) {
    LogRecord rec;
    rec.kind = RecordKind::Bootstrap;
    rec.offset = std::move(offset);
    rec.quotient = std::move(quotient);
    rec.prior_noise = std::move(prior_noise);
    return rec;
  }
  static LogRecord mod_reduce(Integer multiple) {
    LogRecord rec;
    rec.kind = RecordKind::ModReduce;
    rec.multiple = std::move(multiple);
    return rec;
  }
};

/// Ordered operation history of a ciphertext. `blind_weight` caches the net
/// multiplicity of the key's blinding constant folded into the value; it must
/// always equal the fold of `records` (fresh +1, add +other.w, scalar *k).
/// Logs are persistent values: operations copy-on-extend, and Add records
/// share the second operand's log through a shared_ptr.
struct TransformationLog {
  Integer blind_weight = 0;
  std::vector<LogRecord> records;

  static TransformationLog fresh_log() {
    TransformationLog log;
    log.blind_weight = 1;
    log.records.push_back(LogRecord::fresh());
    return log;
  }
};

namespace detail {

/// Everything decryption needs from a log in one pass:
///  w               net blind multiplicity,
///  boot_correction the scaled sum of (offset + quotient) over Bootstrap
///                  records (what "unwinding bootstraps" adds back),
///  mod_correction  the scaled sum of ModReduce multiples.
/// Scaling: a ScalarMul(k) multiplies every correction accumulated so far,
/// which is exactly how the operation scaled those subtractions in the value.
struct Collected {
  Integer w = 0;
  Rational boot_correction = 0;
  Integer mod_correction = 0;
};

inline Collected collect(const TransformationLog& log);

inline void collect_into(const std::vector<LogRecord>& records, Collected& acc) {
  for (const LogRecord& rec : records) {
    switch (rec.kind) {
      case RecordKind::FreshEncryption:
        acc.w += 1;
        break;
      case RecordKind::Add: {
        if (!rec.other) raise(ErrorCode::MalformedLog, "Add record without embedded log");
        Collected inner = collect(*rec.other);
        acc.w += inner.w;
        acc.boot_correction += inner.boot_correction;
        acc.mod_correction += inner.mod_correction;
        break;
      }
      case RecordKind::AddPlain:
        break;
      case RecordKind::ScalarMul:
        acc.w *= rec.k;
        acc.boot_correction *= Rational(rec.k);
        acc.mod_correction *= rec.k;
        break;
      case RecordKind::Bootstrap:
        acc.boot_correction += rec.offset + rec.quotient;
        break;
      case RecordKind::ModReduce:
        acc.mod_correction += rec.multiple;
        break;
    }
  }
}

inline Collected collect(const TransformationLog& log) {
  Collected acc;
  collect_into(log.records, acc);
  return acc;
}

}  // namespace detail

/// True when any record in the log, including records embedded under Add, is
/// a Bootstrap. A ciphertext value may be non-integral only in that case.
inline bool has_bootstrap(const TransformationLog& log) {
  for (const LogRecord& rec : log.records) {
    if (rec.kind == RecordKind::Bootstrap) return true;
    if (rec.kind == RecordKind::Add && rec.other && has_bootstrap(*rec.other))
      return true;
  }
  return false;
}

/// ModReduce records exist only in Strict mode; deserialization rejects them
/// in Literal-mode documents.
inline bool has_mod_reduce(const TransformationLog& log) {
  for (const LogRecord& rec : log.records) {
    if (rec.kind == RecordKind::ModReduce) return true;
    if (rec.kind == RecordKind::Add && rec.other && has_mod_reduce(*rec.other))
      return true;
  }
  return false;
}

/// Validates structural well-formedness: the cached blind weight matches the
/// record fold, scalar factors are positive, and bootstrap quotients are even
/// integers. Raises MalformedLog on the first violation.
inline void validate_log(const TransformationLog& log) {
  detail::Collected folded = detail::collect(log);  // raises on missing Add logs
  if (folded.w != log.blind_weight)
    raise(ErrorCode::MalformedLog,
          "cached blind weight " + log.blind_weight.str() +
              " does not match record fold " + folded.w.str());
  for (const LogRecord& rec : log.records) {
    switch (rec.kind) {
      case RecordKind::ScalarMul:
        if (rec.k < 1) raise(ErrorCode::MalformedLog, "ScalarMul factor < 1");
        break;
      case RecordKind::Bootstrap:
        if (!is_integral(rec.quotient) || (numerator(rec.quotient) & 1) != 0)
          raise(ErrorCode::MalformedLog, "Bootstrap quotient must be an even integer");
        if (rec.offset < 0 || rec.offset >= 2)
          raise(ErrorCode::MalformedLog, "Bootstrap offset outside [0, 2)");
        if (rec.prior_noise < 0)
          raise(ErrorCode::MalformedLog, "Bootstrap prior noise bound negative");
        break;
      case RecordKind::Add:
        validate_log(*rec.other);
        break;
      default:
        break;
    }
  }
}

/// Recovery adjustment: the amount subtracted from the bootstrap-unwound
/// value to land on the tracked plaintext combination. AddPlain constants are
/// plaintext content and deliberately not part of it.
inline Rational compute_adjustment(const TransformationLog& log, const Integer& blind) {
  detail::Collected acc = detail::collect(log);
  return Rational(acc.w * blind) - Rational(acc.mod_correction);
}

/// Reverses every Bootstrap in the log (suitably scaled by later scalar
/// factors) against `value`.
inline Rational unwind_bootstraps(const Rational& value, const TransformationLog& log) {
  return value + detail::collect(log).boot_correction;
}

namespace detail {

inline Rational replay_records(const std::vector<LogRecord>& records,
                               std::span<const Integer> plaintexts,
                               std::size_t& next, const Integer& blind) {
  Rational value = 0;
  for (const LogRecord& rec : records) {
    switch (rec.kind) {
      case RecordKind::FreshEncryption:
        if (next >= plaintexts.size())
          raise(ErrorCode::MalformedLog, "replay ran out of plaintext operands");
        value += Rational(plaintexts[next++] + blind);
        break;
      case RecordKind::Add:
        if (!rec.other) raise(ErrorCode::MalformedLog, "Add record without embedded log");
        value += replay_records(rec.other->records, plaintexts, next, blind);
        break;
      case RecordKind::AddPlain:
        value += Rational(rec.k);
        break;
      case RecordKind::ScalarMul:
        value *= Rational(rec.k);
        break;
      case RecordKind::Bootstrap:
        value -= rec.offset + rec.quotient;
        break;
      case RecordKind::ModReduce:
        value -= Rational(rec.multiple);
        break;
    }
  }
  return value;
}

}  // namespace detail

/// Audit replay: re-executes the logged pipeline over the constituent
/// plaintext history and returns the value it reproduces. Plaintexts are
/// consumed in the order FreshEncryption records appear, recursing into Add
/// embeddings at their position.
inline Rational replay_log(const TransformationLog& log,
                           std::span<const Integer> plaintexts,
                           const Integer& blind) {
  std::size_t next = 0;
  Rational value = detail::replay_records(log.records, plaintexts, next, blind);
  if (next != plaintexts.size())
    raise(ErrorCode::MalformedLog, "replay left unused plaintext operands");
  return value;
}

}  // namespace him

#endif  // HIM_LOG_HPP
