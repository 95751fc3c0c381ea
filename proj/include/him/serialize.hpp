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

#ifndef HIM_SERIALIZE_HPP
#define HIM_SERIALIZE_HPP

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "him/cipher.hpp"
#include "him/keys.hpp"
#include "him/log.hpp"
#include "him/matrix.hpp"

namespace him {

// Canonical text formats. All arbitrary-precision integers travel as decimal
// strings and rationals as numerator/denominator string pairs; field order is
// fixed, so serialize(parse(serialize(x))) is byte-identical to serialize(x).
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

namespace detail {

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

inline const Json& require_field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    raise(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

inline std::string require_string(const Json& j, const char* name) {
  const Json& field = require_field(j, name);
  if (!field.is_string())
    raise(ErrorCode::ParseError, std::string("field '") + name + "' must be a string");
  return field.get<std::string>();
}

inline Integer require_integer(const Json& j, const char* name) {
  return parse_integer(require_string(j, name));
}

inline std::uint64_t require_u64(const Json& j, const char* name) {
  Integer v = require_integer(j, name);
  if (v < 0 || v > Integer(0xffffffffffffffffULL))
    raise(ErrorCode::ParseError, std::string("field '") + name + "' out of u64 range");
  return static_cast<std::uint64_t>(v);
}

inline void require_version(const Json& j) {
  const Json& v = require_field(j, "version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
    raise(ErrorCode::ParseError, "unsupported format version");
}

}  // namespace detail

inline const char* mask_mode_name(MaskMode m) {
  return m == MaskMode::Zero ? "zero" : "seeded";
}

inline MaskMode mask_mode_from_name(std::string_view name) {
  if (name == "zero") return MaskMode::Zero;
  if (name == "seeded") return MaskMode::Seeded;
  raise(ErrorCode::ParseError, "mask_mode must be 'zero' or 'seeded'");
}

inline const char* mode_name(Mode m) { return m == Mode::Literal ? "literal" : "strict"; }

inline Mode mode_from_name(std::string_view name) {
  if (name == "literal") return Mode::Literal;
  if (name == "strict") return Mode::Strict;
  raise(ErrorCode::ParseError, "mode must be 'literal' or 'strict'");
}

inline Json params_to_json(const SecurityParams& p) {
  Json j;
  j["delta"] = p.delta;
  j["gamma"] = p.gamma;
  j["beta"] = p.beta;
  j["y_num"] = numerator(p.y).str();
  j["y_den"] = denominator(p.y).str();
  j["mask_mode"] = mask_mode_name(p.mask_mode);
  j["d_max"] = p.d_max.str();
  return j;
}

inline SecurityParams params_from_json(const Json& j) {
  SecurityParams p;
  auto small_uint = [&](const char* name) {
    const Json& f = detail::require_field(j, name);
    if (!f.is_number_unsigned())
      raise(ErrorCode::ParseError, std::string("field '") + name +
                                       "' must be an unsigned integer");
    return f.get<unsigned>();
  };
  p.delta = small_uint("delta");
  p.gamma = small_uint("gamma");
  p.beta = small_uint("beta");
  Integer y_num = detail::require_integer(j, "y_num");
  Integer y_den = detail::require_integer(j, "y_den");
  if (y_den == 0) raise(ErrorCode::ParseError, "y_den must be nonzero");
  p.y = Rational(y_num, y_den);
  p.mask_mode = mask_mode_from_name(detail::require_string(j, "mask_mode"));
  p.d_max = detail::require_integer(j, "d_max");
  return validate_params(p);
}

// ---------------------------------------------------------------------------
// Transformation log

inline Json log_records_to_json(const TransformationLog& log);

inline Json record_to_json(const LogRecord& rec) {
  Json j;
  switch (rec.kind) {
    case RecordKind::FreshEncryption:
      j["kind"] = "fresh";
      break;
    case RecordKind::Add:
      j["kind"] = "add";
      j["log"] = log_records_to_json(*rec.other);
      break;
    case RecordKind::AddPlain:
      j["kind"] = "add_plain";
      j["k"] = rec.k.str();
      break;
    case RecordKind::ScalarMul:
      j["kind"] = "scalar_mul";
      j["k"] = rec.k.str();
      break;
    case RecordKind::Bootstrap:
      j["kind"] = "bootstrap";
      j["offset_num"] = numerator(rec.offset).str();
      j["offset_den"] = denominator(rec.offset).str();
      j["quotient_num"] = numerator(rec.quotient).str();
      j["quotient_den"] = denominator(rec.quotient).str();
      j["prior_noise"] = rec.prior_noise.str();
      break;
    case RecordKind::ModReduce:
      j["kind"] = "mod_reduce";
      j["multiple"] = rec.multiple.str();
      break;
  }
  return j;
}

inline Json log_records_to_json(const TransformationLog& log) {
  Json arr = Json::array();
  for (const LogRecord& rec : log.records) arr.push_back(record_to_json(rec));
  return arr;
}

inline TransformationLog log_from_json(const Json& arr);

inline LogRecord record_from_json(const Json& j) {
  std::string kind = detail::require_string(j, "kind");
  if (kind == "fresh") return LogRecord::fresh();
  if (kind == "add") {
    const Json& inner = detail::require_field(j, "log");
    return LogRecord::add(
        std::make_shared<const TransformationLog>(log_from_json(inner)));
  }
  if (kind == "add_plain") return LogRecord::add_plain(detail::require_integer(j, "k"));
  if (kind == "scalar_mul") return LogRecord::scalar_mul(detail::require_integer(j, "k"));
  if (kind == "bootstrap") {
    Integer off_den = detail::require_integer(j, "offset_den");
    Integer quo_den = detail::require_integer(j, "quotient_den");
    if (off_den == 0 || quo_den == 0)
      raise(ErrorCode::ParseError, "zero denominator in bootstrap record");
    return LogRecord::bootstrap(
        Rational(detail::require_integer(j, "offset_num"), off_den),
        Rational(detail::require_integer(j, "quotient_num"), quo_den),
        detail::require_integer(j, "prior_noise"));
  }
  if (kind == "mod_reduce")
    return LogRecord::mod_reduce(detail::require_integer(j, "multiple"));
  raise(ErrorCode::ParseError, "unknown log record kind '" + kind + "'");
}

/// The blind weight is not stored; it is refolded from the records, which
/// keeps the cached value consistent with the fold by construction.
inline TransformationLog log_from_json(const Json& arr) {
  if (!arr.is_array()) raise(ErrorCode::ParseError, "log must be an array of records");
  TransformationLog log;
  for (const Json& rj : arr) log.records.push_back(record_from_json(rj));
  detail::Collected folded = detail::collect(log);
  log.blind_weight = folded.w;
  return log;
}

// ---------------------------------------------------------------------------
// Keys

namespace detail {

inline Json key_body_to_json(const PublicKey& pub) {
  Json j;
  j["version"] = kFormatVersion;
  j["params"] = params_to_json(pub.params);
  j["a0"] = pub.a0.str();
  j["rs1"] = std::to_string(pub.rs1);
  j["blind"] = pub.blind.str();
  j["key_id"] = hex(pub.key_id);
  return j;
}

inline PublicKey public_key_from_json(const Json& j) {
  require_version(j);
  PublicKey pub;
  pub.params = params_from_json(require_field(j, "params"));
  pub.a0 = require_integer(j, "a0");
  pub.rs1 = require_u64(j, "rs1");
  pub.blind = require_integer(j, "blind");
  pub.key_id = digest_from_hex(require_string(j, "key_id"));
  if (pub.a0 < 1) raise(ErrorCode::ParseError, "a0 must be >= 1");
  if ((pub.blind & 1) != 0) raise(ErrorCode::ParseError, "blind must be even");
  if (pub.key_id != compute_key_id(pub.a0, pub.rs1, pub.params, pub.blind))
    raise(ErrorCode::ParseError, "key_id does not match key material");
  return pub;
}

}  // namespace detail

inline std::string serialize_public_key(const PublicKey& pub) {
  return detail::key_body_to_json(pub).dump(2) + "\n";
}

inline std::string serialize_secret_key(const KeyPair& kp) {
  Json j = detail::key_body_to_json(kp.pub);
  j["r"] = kp.priv.r.str();
  return j.dump(2) + "\n";
}

inline PublicKey parse_public_key(std::string_view text) {
  Json j = detail::parse_json(text);
  if (j.contains("r"))
    raise(ErrorCode::ParseError, "secret key material in a public key slot");
  return detail::public_key_from_json(j);
}

inline KeyPair parse_secret_key(std::string_view text) {
  Json j = detail::parse_json(text);
  KeyPair kp;
  kp.pub = detail::public_key_from_json(j);
  kp.priv.r = detail::require_integer(j, "r");
  kp.priv.key_id = kp.pub.key_id;
  if (kp.priv.r < 2 || kp.pub.a0 % kp.priv.r != 0)
    raise(ErrorCode::ParseError, "a0 is not a multiple of r");
  if (!is_probable_prime(kp.priv.r))
    raise(ErrorCode::ParseError, "secret prime fails the primality check");
  return kp;
}

// ---------------------------------------------------------------------------
// Ciphertexts and cipher matrices

namespace detail {

inline void ciphertext_body_to_json(const Ciphertext& ct, Json& j) {
  j["value_num"] = numerator(ct.value).str();
  j["value_den"] = denominator(ct.value).str();
  j["noise_bound"] = ct.noise_bound.str();
  j["log"] = log_records_to_json(ct.log);
}

inline void ciphertext_body_from_json(const Json& j, Ciphertext& ct) {
  Integer den = require_integer(j, "value_den");
  if (den == 0) raise(ErrorCode::ParseError, "value_den must be nonzero");
  ct.value = Rational(require_integer(j, "value_num"), den);
  ct.noise_bound = require_integer(j, "noise_bound");
  if (ct.noise_bound < 0) raise(ErrorCode::ParseError, "noise_bound must be >= 0");
  ct.log = log_from_json(require_field(j, "log"));
  try {
    validate_log(ct.log);
  } catch (const Error& e) {
    raise(ErrorCode::ParseError, e.what());
  }
  if (!has_bootstrap(ct.log) && !is_integral(ct.value))
    raise(ErrorCode::ParseError, "non-integral value without a bootstrap record");
  if (ct.mode == Mode::Literal && has_mod_reduce(ct.log))
    raise(ErrorCode::ParseError, "ModReduce record in a literal-mode ciphertext");
}

}  // namespace detail

inline std::string serialize_ciphertext(const Ciphertext& ct) {
  Json j;
  j["version"] = kFormatVersion;
  j["key_id"] = hex(ct.key_id);
  j["mode"] = mode_name(ct.mode);
  detail::ciphertext_body_to_json(ct, j);
  return j.dump(2) + "\n";
}

inline Ciphertext parse_ciphertext(std::string_view text) {
  Json j = detail::parse_json(text);
  detail::require_version(j);
  Ciphertext ct;
  ct.key_id = digest_from_hex(detail::require_string(j, "key_id"));
  ct.mode = mode_from_name(detail::require_string(j, "mode"));
  detail::ciphertext_body_from_json(j, ct);
  return ct;
}

inline std::string serialize_cipher_matrix(const CipherMatrix& m) {
  if (m.entries.empty())
    raise(ErrorCode::ShapeMismatch, "cannot serialize an empty cipher matrix");
  Json j;
  j["version"] = kFormatVersion;
  j["key_id"] = hex(m.entries.front().key_id);
  j["mode"] = mode_name(m.entries.front().mode);
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  Json arr = Json::array();
  for (const Ciphertext& ct : m.entries) {
    Json e;
    detail::ciphertext_body_to_json(ct, e);
    arr.push_back(std::move(e));
  }
  j["entries"] = std::move(arr);
  return j.dump(2) + "\n";
}

inline CipherMatrix parse_cipher_matrix(std::string_view text) {
  Json j = detail::parse_json(text);
  detail::require_version(j);
  CipherMatrix m;
  Digest key_id = digest_from_hex(detail::require_string(j, "key_id"));
  Mode mode = mode_from_name(detail::require_string(j, "mode"));
  const Json& rows = detail::require_field(j, "rows");
  const Json& cols = detail::require_field(j, "cols");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned())
    raise(ErrorCode::ParseError, "rows/cols must be unsigned integers");
  m.rows = rows.get<std::size_t>();
  m.cols = cols.get<std::size_t>();
  const Json& entries = detail::require_field(j, "entries");
  if (!entries.is_array() || entries.size() != m.rows * m.cols || entries.empty())
    raise(ErrorCode::ParseError, "entry count does not match rows*cols");
  for (const Json& e : entries) {
    Ciphertext ct;
    ct.key_id = key_id;
    ct.mode = mode;
    detail::ciphertext_body_from_json(e, ct);
    m.entries.push_back(std::move(ct));
  }
  return m;
}

// ---------------------------------------------------------------------------
// File helpers

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::ParseError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) raise(ErrorCode::ParseError, "failed writing '" + path + "'");
}

}  // namespace him

#endif  // HIM_SERIALIZE_HPP
