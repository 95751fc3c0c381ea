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

using oracle::CliResult;
using oracle::run_cli;
using oracle::TempDir;

TEST_CASE("demo prints the golden transcript and exits 0") {
  CliResult r = run_cli("demo");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[5, 10; 15, 20]"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[43, 48; 53, 58]"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[44, 50; 56, 62]"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[86, 96; 106, 116]"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[2/5, 7/5; 2/5, 7/5]"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[0.4, 1.4; 0.4, 1.4]"));
  CHECK_THAT(r.out,
             Catch::Matchers::ContainsSubstring("Recovered Data: [5, 10; 15, 20]"));
}

TEST_CASE("demo transcript is stable and matches the pinned golden text") {
  const std::string golden =
      "Input matrix:\n"
      "[5, 10; 15, 20]\n"
      "Encrypted matrix:\n"
      "[43, 48; 53, 58]\n"
      "After element-wise addition of [1, 2; 3, 4]:\n"
      "[44, 50; 56, 62]\n"
      "After scalar multiplication by 2:\n"
      "[86, 96; 106, 116]\n"
      "After bootstrapping with offset 3/5 (= 0.6):\n"
      "[2/5, 7/5; 2/5, 7/5]\n"
      "  as decimals: [0.4, 1.4; 0.4, 1.4]\n"
      "Recovered Data: [5, 10; 15, 20]\n";
  CliResult a = run_cli("demo");
  CliResult b = run_cli("demo");
  CHECK(a.out == golden);
  CHECK(a.out == b.out);
}

TEST_CASE("demo --json carries the same golden values") {
  CliResult r = run_cli("demo --json");
  REQUIRE(r.exit_code == 0);
  him::Json j = him::Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["encrypted"] == him::Json::parse(R"([["43","48"],["53","58"]])"));
  CHECK(j["bootstrapped"] == him::Json::parse(R"([["2/5","7/5"],["2/5","7/5"]])"));
  CHECK(j["bootstrapped_decimal"] == him::Json::parse(R"([["0.4","1.4"],["0.4","1.4"]])"));
  CHECK(j["recovered"] == him::Json::parse(R"([["5","10"],["15","20"]])"));
}

TEST_CASE("keygen/encrypt/decrypt through files recovers the plaintext") {
  TempDir dir;
  std::string pub = dir.file("key.pub.json");
  std::string priv = dir.file("key.sec.json");
  CHECK(run_cli("keygen --pub " + pub + " --priv " + priv +
                " --delta 8 --gamma 24 --dmax 1000 --seed 5")
            .exit_code == 0);

  std::string ct = dir.file("ct.json");
  CHECK(run_cli("encrypt --pub " + pub + " --value 5 --out " + ct).exit_code == 0);
  CliResult dec = run_cli("decrypt " + ct + " --priv " + priv);
  CHECK(dec.exit_code == 0);
  CHECK(dec.out == "5\n");
}

TEST_CASE("exit codes: boundary rejection, key mismatch, parse failure") {
  TempDir dir;
  std::string pub1 = dir.file("k1.pub"), priv1 = dir.file("k1.sec");
  std::string pub2 = dir.file("k2.pub"), priv2 = dir.file("k2.sec");
  REQUIRE(run_cli("keygen --pub " + pub1 + " --priv " + priv1 +
                  " --delta 8 --gamma 24 --dmax 100 --seed 1")
              .exit_code == 0);
  REQUIRE(run_cli("keygen --pub " + pub2 + " --priv " + priv2 +
                  " --delta 8 --gamma 24 --dmax 100 --seed 2")
              .exit_code == 0);

  // d = d_max is out of range: exit 4.
  CHECK(run_cli("encrypt --pub " + pub1 + " --value 100 --out " + dir.file("x"))
            .exit_code == 4);

  // Ciphertexts under different keys: exit 3.
  std::string ct1 = dir.file("ct1"), ct2 = dir.file("ct2");
  REQUIRE(run_cli("encrypt --pub " + pub1 + " --value 1 --out " + ct1).exit_code == 0);
  REQUIRE(run_cli("encrypt --pub " + pub2 + " --value 2 --out " + ct2).exit_code == 0);
  CHECK(run_cli("add " + ct1 + " " + ct2 + " --pub " + pub1 + " --out " +
                dir.file("sum"))
            .exit_code == 3);

  // Decrypting under the wrong key: exit 3.
  CHECK(run_cli("decrypt " + ct1 + " --priv " + priv2).exit_code == 3);

  // Garbage input: exit 2.
  std::string garbage = dir.file("garbage");
  him::write_file(garbage, "definitely not json");
  CHECK(run_cli("decrypt " + garbage + " --priv " + priv1).exit_code == 2);

  // Missing file: exit 2.
  CHECK(run_cli("decrypt " + dir.file("nope") + " --priv " + priv1).exit_code == 2);

  // CLI misuse: exit 2.
  CHECK(run_cli("no-such-subcommand").exit_code == 2);
  CHECK(run_cli("decrypt").exit_code == 2);

  // A fractional value whose log cannot explain it decrypts to a non-integer:
  // exit 6.
  std::string booted = dir.file("booted");
  REQUIRE(run_cli("bootstrap " + ct1 + " --pub " + pub1 + " --offsets 1/3 --out " +
                  booted)
              .exit_code == 0);
  std::string text = him::read_file(booted);
  auto pos = text.find("\"value_den\": \"3\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 16, "\"value_den\": \"7\"");
  std::string corrupted = dir.file("corrupted");
  him::write_file(corrupted, text);
  CHECK(run_cli("decrypt " + corrupted + " --priv " + priv1).exit_code == 6);
}

TEST_CASE("strict-mode over-budget addition exits 5 and scalar guard exits 1") {
  TempDir dir;
  std::string pub = dir.file("k.pub"), priv = dir.file("k.sec");
  REQUIRE(run_cli("keygen --pub " + pub + " --priv " + priv +
                  " --delta 4 --gamma 4 --dmax 16 --seed 3")
              .exit_code == 0);
  std::string a = dir.file("a"), b = dir.file("b");
  REQUIRE(run_cli("encrypt --pub " + pub + " --value 1 --mode strict --out " + a)
              .exit_code == 0);
  REQUIRE(run_cli("encrypt --pub " + pub + " --value 2 --mode strict --out " + b)
              .exit_code == 0);
  CHECK(run_cli("add " + a + " " + b + " --pub " + pub + " --out " + dir.file("s"))
            .exit_code == 5);
  CHECK(run_cli("scalar-mul " + a + " --pub " + pub + " --scalar 0 --out " +
                dir.file("t"))
            .exit_code == 1);
}

TEST_CASE("full evaluation pipeline through files") {
  TempDir dir;
  std::string pub = dir.file("k.pub"), priv = dir.file("k.sec");
  REQUIRE(run_cli("keygen --pub " + pub + " --priv " + priv +
                  " --delta 10 --gamma 30 --dmax 1000 --seed 9")
              .exit_code == 0);

  std::string c5 = dir.file("c5"), c10 = dir.file("c10");
  REQUIRE(run_cli("encrypt --pub " + pub + " --value 5 --out " + c5).exit_code == 0);
  REQUIRE(run_cli("encrypt --pub " + pub + " --value 10 --out " + c10).exit_code == 0);

  std::string sum = dir.file("sum");
  REQUIRE(run_cli("add " + c5 + " " + c10 + " --pub " + pub + " --out " + sum)
              .exit_code == 0);
  std::string plus7 = dir.file("plus7");
  REQUIRE(run_cli("add-plain " + sum + " --pub " + pub + " --value 7 --out " + plus7)
              .exit_code == 0);
  std::string tripled = dir.file("tripled");
  REQUIRE(run_cli("scalar-mul " + plus7 + " --pub " + pub + " --scalar 3 --out " +
                  tripled)
              .exit_code == 0);

  CliResult dec = run_cli("decrypt " + tripled + " --priv " + priv);
  CHECK(dec.exit_code == 0);
  CHECK(dec.out == "66\n");  // 3 * (5 + 10 + 7)

  // Bootstrap with the default paper offsets, then decrypt through the log.
  std::string booted = dir.file("booted");
  REQUIRE(run_cli("bootstrap " + tripled + " --pub " + pub + " --out " + booted)
              .exit_code == 0);
  CliResult dec2 = run_cli("decrypt " + booted + " --priv " + priv);
  CHECK(dec2.exit_code == 0);
  CHECK(dec2.out == "66\n");

  // And unbootstrap restores the exact pre-bootstrap document.
  std::string restored = dir.file("restored");
  REQUIRE(run_cli("unbootstrap " + booted + " --out " + restored).exit_code == 0);
  CHECK(him::read_file(restored) == him::read_file(tripled));

  // Decryption with a parity check over the file roundtrip.
  him::Ciphertext ct = him::parse_ciphertext(him::read_file(tripled));
  CHECK(him::parity(ct) == 0);
}

TEST_CASE("matrix pipeline through files") {
  TempDir dir;
  std::string pub = dir.file("k.pub"), priv = dir.file("k.sec");
  REQUIRE(run_cli("keygen --pub " + pub + " --priv " + priv +
                  " --delta 8 --gamma 24 --dmax 100 --seed 4")
              .exit_code == 0);
  std::string csv = dir.file("m.csv");
  him::write_file(csv, "5,10\n15,20\n");
  std::string cmx = dir.file("m.cmx");
  REQUIRE(run_cli("encrypt-matrix --pub " + pub + " --matrix " + csv + " --out " + cmx)
              .exit_code == 0);
  CliResult dec = run_cli("decrypt-matrix " + cmx + " --priv " + priv);
  CHECK(dec.exit_code == 0);
  CHECK(dec.out == "5,10\n15,20\n");
}

TEST_CASE("dash paths stream through stdin and stdout") {
  TempDir dir;
  std::string pub = dir.file("k.pub"), priv = dir.file("k.sec");
  REQUIRE(run_cli("keygen --pub " + pub + " --priv " + priv +
                  " --delta 8 --gamma 24 --dmax 100 --seed 6")
              .exit_code == 0);
  // One shell pipeline: encrypt to stdout, decrypt from stdin.
  CliResult piped = run_cli("encrypt --pub " + pub + " --value 41 --out - | " +
                            std::string(HIM_CLI_PATH) + " decrypt - --priv " + priv);
  CHECK(piped.exit_code == 0);
  CHECK(piped.out == "41\n");
}

TEST_CASE("bench subcommand writes CSV and markdown reports") {
  TempDir dir;
  std::string prefix = dir.file("rep");
  CliResult r = run_cli("bench --reps 1 --min 5 --max 5 --delta 8 --gamma 24 --out " +
                        prefix);
  CHECK(r.exit_code == 0);
  std::string csv = him::read_file(prefix + ".csv");
  CHECK(csv.rfind("phase,repetition,delta,gamma,ms\n", 0) == 0);
  // 5 phases x 1 repetition.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  std::string md = him::read_file(prefix + ".md");
  CHECK_THAT(md, Catch::Matchers::ContainsSubstring("| Proposed Method | "));
  CHECK_THAT(md, !Catch::Matchers::ContainsSubstring("Kim et al."));

  CliResult r2 = run_cli("bench --reps 1 --min 5 --max 5 --delta 8 --gamma 24 "
                         "--include-paper-rows --json --out " + prefix);
  CHECK(r2.exit_code == 0);
  std::string md2 = him::read_file(prefix + ".md");
  CHECK_THAT(md2, Catch::Matchers::ContainsSubstring(
                      "| Kim et al. | 50 | 200 | Moderate | Low | 5 |"));
  CHECK_THAT(md2, Catch::Matchers::ContainsSubstring(
                      "| Proposed Method | 35 | 140 | Very Low | Low | 4 |"));
  him::Json doc = him::Json::parse(him::read_file(prefix + ".json"));
  CHECK(doc.is_array());
}
