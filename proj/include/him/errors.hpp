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

#ifndef HIM_ERRORS_HPP
#define HIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace him {

enum class ErrorCode {
  InvalidParams,
  PrimeSearchExhausted,
  FixedKeyInvalid,
  MessageOutOfRange,
  KeyMismatch,
  ModeMismatch,
  BootstrappedOperand,
  NonPositiveScalar,
  NoiseBudgetExceeded,
  NonIntegerDecryption,
  IntegrityFailure,
  MalformedLog,
  NoBootstrapRecord,
  ShapeMismatch,
  InvalidBounds,
  InsufficientPoints,
  VerificationFailed,
  ConfigError,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::PrimeSearchExhausted: return "PrimeSearchExhausted";
    case ErrorCode::FixedKeyInvalid: return "FixedKeyInvalid";
    case ErrorCode::MessageOutOfRange: return "MessageOutOfRange";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::BootstrappedOperand: return "BootstrappedOperand";
    case ErrorCode::NonPositiveScalar: return "NonPositiveScalar";
    case ErrorCode::NoiseBudgetExceeded: return "NoiseBudgetExceeded";
    case ErrorCode::NonIntegerDecryption: return "NonIntegerDecryption";
    case ErrorCode::IntegrityFailure: return "IntegrityFailure";
    case ErrorCode::MalformedLog: return "MalformedLog";
    case ErrorCode::NoBootstrapRecord: return "NoBootstrapRecord";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

/// Library-wide exception. Every failure carries a code so callers (and the
/// CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace him

#endif  // HIM_ERRORS_HPP
