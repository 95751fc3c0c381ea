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

#include "test_util.hpp"

using him::Ciphertext;
using him::ErrorCode;
using him::Integer;
using him::KeyPair;
using him::Rational;
using him::Rng;
using him::SecurityParams;
using testutil::expect_error;

TEST_CASE("demo-key encryptions: 5,10,15,20 -> 43,48,53,58") {
  KeyPair kp = testutil::demo_keypair();
  const Integer plain[] = {5, 10, 15, 20};
  const Integer expected[] = {43, 48, 53, 58};
  for (int i = 0; i < 4; ++i) {
    Ciphertext ct = him::encrypt(kp.pub, plain[i]);
    CHECK(ct.value == Rational(expected[i]));
    CHECK(ct.noise_bound == 38);
    CHECK(ct.log.blind_weight == 1);
    REQUIRE(ct.log.records.size() == 1);
    CHECK(ct.log.records[0].kind == him::RecordKind::FreshEncryption);
  }
}

TEST_CASE("zero message exposes exactly the blind") {
  KeyPair kp = testutil::demo_keypair();
  CHECK(him::encrypt(kp.pub, 0).value == Rational(38));
  CHECK(him::decrypt(kp, him::encrypt(kp.pub, 0)) == 0);
}

TEST_CASE("out-of-range messages are rejected") {
  KeyPair kp = testutil::demo_keypair();  // d_max = 100
  expect_error(ErrorCode::MessageOutOfRange, "", [&] { him::encrypt(kp.pub, -1); });
  expect_error(ErrorCode::MessageOutOfRange, "", [&] { him::encrypt(kp.pub, 100); });
  CHECK(him::encrypt(kp.pub, 99).value == Rational(137));
}

TEST_CASE("demo-key decryptions: 43,48,53,58 -> 5,10,15,20") {
  KeyPair kp = testutil::demo_keypair();
  const Integer plain[] = {5, 10, 15, 20};
  for (const Integer& d : plain) {
    CHECK(him::decrypt(kp, him::encrypt(kp.pub, d)) == d);
  }
}

TEST_CASE("decrypting a three-way sum uses the blind-weight adjustment") {
  KeyPair kp = testutil::demo_keypair();
  Ciphertext sum = him::add(kp.pub, him::encrypt(kp.pub, 5),
                            him::add(kp.pub, him::encrypt(kp.pub, 10),
                                     him::encrypt(kp.pub, 15)));
  CHECK(sum.value == Rational(43 + 48 + 53));
  CHECK(sum.log.blind_weight == 3);
  CHECK(him::compute_adjustment(sum.log, kp.pub.blind) == Rational(114));
  CHECK(him::decrypt(kp, sum) == 30);
}

TEST_CASE("seeded-mask encryption carries 2S on top of 2r") {
  SecurityParams params;
  params.delta = 10;
  params.gamma = 24;
  params.beta = 2;
  params.mask_mode = him::MaskMode::Seeded;
  params.d_max = 1000;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    KeyPair kp = him::keygen(params, rng);
    Ciphertext ct = him::encrypt(kp.pub, 123);
    Integer residue = numerator(ct.value) - 123 - 2 * kp.priv.r;
    CAPTURE(seed);
    CHECK(residue % 2 == 0);
    CHECK(residue == 2 * oracle::mask_sum(kp.pub.rs1, params.beta, params.delta));
  }
}

TEST_CASE("roundtrip holds for random keys and messages in both mask modes") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 200; ++i) {
    SecurityParams params;
    params.delta = 4 + static_cast<unsigned>(gen() % 13);
    params.gamma = params.delta + 8;
    params.beta = 1 + static_cast<unsigned>(gen() % 3);
    params.mask_mode = (gen() & 1) ? him::MaskMode::Seeded : him::MaskMode::Zero;
    params.d_max = Integer(1) << params.delta;
    Rng rng(gen());
    KeyPair kp = him::keygen(params, rng);
    Rng msg_rng(gen());
    Integer d = msg_rng.uniform_below(params.d_max);
    CAPTURE(i, params.delta, d.str());
    CHECK(him::decrypt(kp, him::encrypt(kp.pub, d)) == d);
  }
}

TEST_CASE("encryption is deterministic per key") {
  KeyPair kp = testutil::demo_keypair();
  Ciphertext a = him::encrypt(kp.pub, 7);
  Ciphertext b = him::encrypt(kp.pub, 7);
  CHECK(a.value == b.value);
  CHECK(him::serialize_ciphertext(a) == him::serialize_ciphertext(b));
}

TEST_CASE("literal mode flags negative adjusted values as integrity failures") {
  KeyPair kp = testutil::demo_keypair();
  Ciphertext ct = him::add_plain(kp.pub, him::encrypt(kp.pub, 5), -10);
  expect_error(ErrorCode::IntegrityFailure, "", [&] { him::decrypt(kp, ct); });
}

TEST_CASE("decrypt rejects ciphertexts from another key") {
  KeyPair kp1 = testutil::demo_keypair();
  KeyPair kp2 = testutil::roomy_keypair();
  Ciphertext ct = him::encrypt(kp2.pub, 5);
  expect_error(ErrorCode::KeyMismatch, "", [&] { him::decrypt(kp1, ct); });
}

TEST_CASE("parity equals plaintext parity for fresh and combined ciphertexts") {
  KeyPair kp = testutil::demo_keypair();
  CHECK(him::parity(him::encrypt(kp.pub, 5)) == 1);
  for (Integer d = 0; d < 100; ++d) {
    CHECK(him::parity(him::encrypt(kp.pub, d)) ==
          static_cast<unsigned>(Integer(d % 2)));
  }
  Ciphertext sum = him::add(kp.pub, him::encrypt(kp.pub, 5), him::encrypt(kp.pub, 10));
  CHECK(him::parity(sum) == 1);  // 15 mod 2
}

TEST_CASE("parity refuses non-integral (bootstrapped) values") {
  KeyPair kp = testutil::demo_keypair();
  him::RationalSequence seq = him::RationalSequence::from_values(
      {Rational(1, 10), Rational(2, 10), Rational(3, 10)});
  Ciphertext booted = him::bootstrap(kp.pub, him::encrypt(kp.pub, 5), seq);
  expect_error(ErrorCode::NonIntegerDecryption, "", [&] { him::parity(booted); });
}
