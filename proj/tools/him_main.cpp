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

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "him/him.hpp"

namespace {

using him::Integer;
using him::Rational;

int exit_code_for(const him::Error& e) {
  switch (e.code()) {
    case him::ErrorCode::ParseError: return 2;
    case him::ErrorCode::KeyMismatch: return 3;
    case him::ErrorCode::MessageOutOfRange: return 4;
    case him::ErrorCode::NoiseBudgetExceeded: return 5;
    case him::ErrorCode::NonIntegerDecryption: return 6;
    case him::ErrorCode::VerificationFailed: return 7;
    default: return 1;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return him::read_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  him::write_file(path, content);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const char* flag) {
  std::vector<unsigned> out;
  for (const std::string& item : split(text, ',')) {
    Integer v = him::parse_integer(item);
    if (v < 0 || v > 1000000)
      him::raise(him::ErrorCode::ParseError,
                 std::string(flag) + ": value out of range: " + item);
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty())
    him::raise(him::ErrorCode::ParseError, std::string(flag) + ": empty list");
  return out;
}

him::RationalSequence parse_offsets(const std::string& text) {
  std::vector<Rational> values;
  for (const std::string& item : split(text, ',')) values.push_back(him::parse_rational(item));
  return him::RationalSequence::from_values(std::move(values));
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// ---------------------------------------------------------------------------

struct KeygenArgs {
  std::string pub_path, priv_path;
  unsigned delta = 32, gamma = 64, beta = 2;
  std::string y = "3/2";
  std::string mask = "zero";
  std::string dmax = "4294967296";
  std::optional<std::uint64_t> seed;
};

int run_keygen(const KeygenArgs& args) {
  him::SecurityParams params;
  params.delta = args.delta;
  params.gamma = args.gamma;
  params.beta = args.beta;
  params.y = him::parse_rational(args.y);
  params.mask_mode = him::mask_mode_from_name(args.mask);
  params.d_max = him::parse_integer(args.dmax);
  him::Rng rng(args.seed ? *args.seed : entropy_seed());
  him::KeyPair kp = him::keygen(params, rng);
  write_output(args.pub_path, him::serialize_public_key(kp.pub));
  write_output(args.priv_path, him::serialize_secret_key(kp));
  return 0;
}

// ---------------------------------------------------------------------------

std::string render_matrix(const std::vector<std::string>& cells, std::size_t rows,
                          std::size_t cols) {
  std::string out = "[";
  for (std::size_t r = 0; r < rows; ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out += ", ";
      out += cells[r * cols + c];
    }
  }
  out += "]";
  return out;
}

std::vector<std::string> fraction_cells(const him::CipherMatrix& m) {
  std::vector<std::string> out;
  for (const him::Ciphertext& ct : m.entries) out.push_back(him::fraction_string(ct.value));
  return out;
}

std::vector<std::string> decimal_cells(const him::CipherMatrix& m) {
  std::vector<std::string> out;
  for (const him::Ciphertext& ct : m.entries) out.push_back(him::decimal_string(ct.value));
  return out;
}

std::vector<std::string> plain_cells(const him::PlainMatrix& m) {
  std::vector<std::string> out;
  for (const Integer& v : m.entries) out.push_back(v.str());
  return out;
}

him::Json cells_to_json(const std::vector<std::string>& cells, std::size_t rows,
                        std::size_t cols) {
  him::Json out = him::Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    him::Json row = him::Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(cells[r * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

/// End-to-end worked pipeline on the fixed demo key (r = 19, q0 = 1, zero
/// mask, literal mode). Exits 0 only if every stage matches the built-in
/// golden values.
int run_demo(bool json_output) {
  him::SecurityParams params;
  params.delta = 4;
  params.gamma = 10;
  params.beta = 2;
  params.y = Rational(3, 2);
  params.mask_mode = him::MaskMode::Zero;
  params.d_max = 100;
  him::Rng rng(42);
  him::KeyPair kp = him::keygen(params, rng, him::FixedKey{19, 1});

  const him::PlainMatrix input = him::make_plain_matrix(2, 2, {5, 10, 15, 20});
  const him::PlainMatrix addend = him::make_plain_matrix(2, 2, {1, 2, 3, 4});
  const him::CipherMatrix encrypted = him::encrypt_matrix(kp.pub, input);
  const him::CipherMatrix addition = him::add_matrices(kp.pub, encrypted, addend);
  const him::CipherMatrix scaled = him::scalar_mul_matrix(kp.pub, encrypted, 2);
  const him::RationalSequence seq = him::RationalSequence::from_values(
      {Rational(1, 10), Rational(2, 10), Rational(3, 10)});
  const him::CipherMatrix booted = him::bootstrap_matrix(kp.pub, encrypted, seq);
  const him::PlainMatrix recovered = him::decrypt_matrix(kp, booted);

  struct Stage {
    const char* name;
    std::vector<std::string> got;
    std::vector<std::string> want;
  };
  std::vector<Stage> stages = {
      {"input", plain_cells(input), {"5", "10", "15", "20"}},
      {"encrypted", fraction_cells(encrypted), {"43", "48", "53", "58"}},
      {"addition", fraction_cells(addition), {"44", "50", "56", "62"}},
      {"scalar", fraction_cells(scaled), {"86", "96", "106", "116"}},
      {"bootstrapped", fraction_cells(booted), {"2/5", "7/5", "2/5", "7/5"}},
      {"recovered", plain_cells(recovered), {"5", "10", "15", "20"}},
  };
  std::string diff;
  for (const Stage& stage : stages) {
    if (stage.got != stage.want) {
      diff += std::string(stage.name) + ": got " + render_matrix(stage.got, 2, 2) +
              ", want " + render_matrix(stage.want, 2, 2) + "\n";
    }
  }

  if (json_output) {
    him::Json j;
    j["input"] = cells_to_json(plain_cells(input), 2, 2);
    j["encrypted"] = cells_to_json(fraction_cells(encrypted), 2, 2);
    j["addend"] = cells_to_json(plain_cells(addend), 2, 2);
    j["addition"] = cells_to_json(fraction_cells(addition), 2, 2);
    j["scalar"] = cells_to_json(fraction_cells(scaled), 2, 2);
    j["bootstrap_offset"] = him::fraction_string(seq.offset);
    j["bootstrapped"] = cells_to_json(fraction_cells(booted), 2, 2);
    j["bootstrapped_decimal"] = cells_to_json(decimal_cells(booted), 2, 2);
    j["recovered"] = cells_to_json(plain_cells(recovered), 2, 2);
    j["ok"] = diff.empty();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Input matrix:\n" << render_matrix(plain_cells(input), 2, 2) << "\n";
    std::cout << "Encrypted matrix:\n"
              << render_matrix(fraction_cells(encrypted), 2, 2) << "\n";
    std::cout << "After element-wise addition of "
              << render_matrix(plain_cells(addend), 2, 2) << ":\n"
              << render_matrix(fraction_cells(addition), 2, 2) << "\n";
    std::cout << "After scalar multiplication by 2:\n"
              << render_matrix(fraction_cells(scaled), 2, 2) << "\n";
    std::cout << "After bootstrapping with offset "
              << him::fraction_string(seq.offset) << " (= "
              << him::decimal_string(seq.offset) << "):\n"
              << render_matrix(fraction_cells(booted), 2, 2) << "\n";
    std::cout << "  as decimals: " << render_matrix(decimal_cells(booted), 2, 2) << "\n";
    std::cout << "Recovered Data: " << render_matrix(plain_cells(recovered), 2, 2)
              << "\n";
  }

  if (!diff.empty()) {
    std::cerr << "demo mismatch against golden values:\n" << diff;
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string reps = "3";
  std::string min = "1";
  std::string max = "100";
  std::string deltas = "32";
  std::string gammas = "64";
  std::string betas = "2";
  std::string mode = "literal";
  std::uint64_t seed = 1;
  std::string out_prefix = "bench_report";
  bool include_paper_rows = false;
  bool json_output = false;
};

int run_bench(const BenchArgs& args) {
  him::bench::BenchConfig config;
  Integer reps = him::parse_integer(args.reps);
  if (reps < 1 || reps > 1000000)
    him::raise(him::ErrorCode::ConfigError, "--reps out of range");
  config.repetitions = static_cast<unsigned>(reps);
  config.dataset_min = him::parse_integer(args.min);
  config.dataset_max = him::parse_integer(args.max);
  config.deltas = parse_unsigned_list(args.deltas, "--delta");
  config.gammas = parse_unsigned_list(args.gammas, "--gamma");
  config.betas = parse_unsigned_list(args.betas, "--beta");
  config.mode = him::mode_from_name(args.mode);
  config.seed = args.seed;

  std::vector<him::bench::BenchReport> reports = him::bench::run_sweep(config);

  const std::string csv_path = args.out_prefix + ".csv";
  const std::string md_path = args.out_prefix + ".md";
  him::write_file(csv_path,
                  him::bench::emit_report(reports, him::bench::ReportFormat::CSV,
                                          args.include_paper_rows));
  him::write_file(md_path,
                  him::bench::emit_report(reports, him::bench::ReportFormat::MarkdownTable,
                                          args.include_paper_rows));
  std::cout << "wrote " << csv_path << "\n" << "wrote " << md_path << "\n";
  if (args.json_output) {
    const std::string json_path = args.out_prefix + ".json";
    him::write_file(json_path,
                    him::bench::emit_report(reports, him::bench::ReportFormat::JSONDoc,
                                            args.include_paper_rows));
    std::cout << "wrote " << json_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HIM: integer homomorphic encryption with tracked, invertible transformations"};
  app.require_subcommand(1);

  KeygenArgs kg;
  CLI::App* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--pub", kg.pub_path, "Public key output path")->required();
  keygen_cmd->add_option("--priv", kg.priv_path, "Secret key output path")->required();
  keygen_cmd->add_option("--delta", kg.delta, "Bit length of the secret prime");
  keygen_cmd->add_option("--gamma", kg.gamma, "Bound parameter for q0");
  keygen_cmd->add_option("--beta", kg.beta, "Mask-sum dimension");
  keygen_cmd->add_option("--y", kg.y, "Structure parameter in (1,2), e.g. 3/2 or 1.5");
  keygen_cmd->add_option("--mask", kg.mask, "Mask mode: zero or seeded");
  keygen_cmd->add_option("--dmax", kg.dmax, "Exclusive plaintext bound");
  keygen_cmd->add_option("--seed", kg.seed, "Deterministic seed (default: OS entropy)");

  struct {
    std::string pub, value, mode = "literal", out;
  } enc;
  CLI::App* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt one integer");
  encrypt_cmd->add_option("--pub", enc.pub, "Public key path")->required();
  encrypt_cmd->add_option("--value", enc.value, "Plaintext integer")->required();
  encrypt_cmd->add_option("--mode", enc.mode, "literal or strict");
  encrypt_cmd->add_option("--out", enc.out, "Ciphertext output path")->required();

  struct {
    std::string pub, matrix, mode = "literal", out;
  } encm;
  CLI::App* encrypt_matrix_cmd =
      app.add_subcommand("encrypt-matrix", "Encrypt a CSV matrix element-wise");
  encrypt_matrix_cmd->add_option("--pub", encm.pub, "Public key path")->required();
  encrypt_matrix_cmd->add_option("--matrix", encm.matrix, "Plain matrix CSV path")->required();
  encrypt_matrix_cmd->add_option("--mode", encm.mode, "literal or strict");
  encrypt_matrix_cmd->add_option("--out", encm.out, "Cipher matrix output path")->required();

  struct {
    std::string ct1, ct2, pub, out;
  } addargs;
  CLI::App* add_cmd = app.add_subcommand("add", "Homomorphic addition of two ciphertexts");
  add_cmd->add_option("ct1", addargs.ct1, "First ciphertext path")->required();
  add_cmd->add_option("ct2", addargs.ct2, "Second ciphertext path")->required();
  add_cmd->add_option("--pub", addargs.pub, "Public key path")->required();
  add_cmd->add_option("--out", addargs.out, "Output path")->required();

  struct {
    std::string ct, pub, value, out;
  } addp;
  CLI::App* add_plain_cmd =
      app.add_subcommand("add-plain", "Add a plaintext constant to a ciphertext");
  add_plain_cmd->add_option("ct", addp.ct, "Ciphertext path")->required();
  add_plain_cmd->add_option("--pub", addp.pub, "Public key path")->required();
  add_plain_cmd->add_option("--value", addp.value, "Plaintext constant")->required();
  add_plain_cmd->add_option("--out", addp.out, "Output path")->required();

  struct {
    std::string ct, pub, scalar, out;
  } smul;
  CLI::App* scalar_mul_cmd =
      app.add_subcommand("scalar-mul", "Multiply a ciphertext by a positive scalar");
  scalar_mul_cmd->add_option("ct", smul.ct, "Ciphertext path")->required();
  scalar_mul_cmd->add_option("--pub", smul.pub, "Public key path")->required();
  scalar_mul_cmd->add_option("--scalar", smul.scalar, "Scalar >= 1")->required();
  scalar_mul_cmd->add_option("--out", smul.out, "Output path")->required();

  struct {
    std::string ct, pub, offsets = "1/10,2/10,3/10", out;
  } boot;
  CLI::App* bootstrap_cmd =
      app.add_subcommand("bootstrap", "Apply the rational-offset mod-2 transform");
  bootstrap_cmd->add_option("ct", boot.ct, "Ciphertext path")->required();
  bootstrap_cmd->add_option("--pub", boot.pub, "Public key path")->required();
  bootstrap_cmd->add_option("--offsets", boot.offsets,
                            "Comma-separated rationals in (0,1), total < 2");
  bootstrap_cmd->add_option("--out", boot.out, "Output path")->required();

  struct {
    std::string ct, out;
  } unboot;
  CLI::App* unbootstrap_cmd =
      app.add_subcommand("unbootstrap", "Revert the most recent bootstrap exactly");
  unbootstrap_cmd->add_option("ct", unboot.ct, "Ciphertext path")->required();
  unbootstrap_cmd->add_option("--out", unboot.out, "Output path")->required();

  struct {
    std::string ct, priv, out = "-";
  } dec;
  CLI::App* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext");
  decrypt_cmd->add_option("ct", dec.ct, "Ciphertext path")->required();
  decrypt_cmd->add_option("--priv", dec.priv, "Secret key path")->required();
  decrypt_cmd->add_option("--out", dec.out, "Output path (default stdout)");

  struct {
    std::string cmx, priv, out = "-";
  } decm;
  CLI::App* decrypt_matrix_cmd =
      app.add_subcommand("decrypt-matrix", "Decrypt a cipher matrix to CSV");
  decrypt_matrix_cmd->add_option("cmx", decm.cmx, "Cipher matrix path")->required();
  decrypt_matrix_cmd->add_option("--priv", decm.priv, "Secret key path")->required();
  decrypt_matrix_cmd->add_option("--out", decm.out, "Output path (default stdout)");

  bool demo_json = false;
  CLI::App* demo_cmd =
      app.add_subcommand("demo", "Run the built-in demo pipeline and self-check it");
  demo_cmd->add_flag("--json", demo_json, "Emit the transcript as JSON");

  BenchArgs ba;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run the benchmark protocol and write reports");
  bench_cmd->add_option("--reps", ba.reps, "Repetitions per parameter point");
  bench_cmd->add_option("--min", ba.min, "Dataset lower bound (inclusive)");
  bench_cmd->add_option("--max", ba.max, "Dataset upper bound (inclusive)");
  bench_cmd->add_option("--delta", ba.deltas, "Comma list of delta values");
  bench_cmd->add_option("--gamma", ba.gammas, "Comma list of gamma values");
  bench_cmd->add_option("--beta", ba.betas, "Comma list of beta values");
  bench_cmd->add_option("--mode", ba.mode, "literal or strict");
  bench_cmd->add_option("--seed", ba.seed, "Benchmark seed");
  bench_cmd->add_option("--out", ba.out_prefix, "Output prefix for .csv/.md(/.json)");
  bench_cmd->add_flag("--include-paper-rows", ba.include_paper_rows,
                      "Append the transcribed reference rows");
  bench_cmd->add_flag("--json", ba.json_output, "Also write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*keygen_cmd) return run_keygen(kg);

    if (*encrypt_cmd) {
      him::PublicKey pub = him::parse_public_key(read_input(enc.pub));
      him::Ciphertext ct = him::encrypt(pub, him::parse_integer(enc.value),
                                        him::mode_from_name(enc.mode));
      write_output(enc.out, him::serialize_ciphertext(ct));
      return 0;
    }

    if (*encrypt_matrix_cmd) {
      him::PublicKey pub = him::parse_public_key(read_input(encm.pub));
      him::PlainMatrix m = him::parse_csv(read_input(encm.matrix));
      him::CipherMatrix cm = him::encrypt_matrix(pub, m, him::mode_from_name(encm.mode));
      write_output(encm.out, him::serialize_cipher_matrix(cm));
      return 0;
    }

    if (*add_cmd) {
      him::PublicKey pub = him::parse_public_key(read_input(addargs.pub));
      him::Ciphertext a = him::parse_ciphertext(read_input(addargs.ct1));
      him::Ciphertext b = him::parse_ciphertext(read_input(addargs.ct2));
      write_output(addargs.out, him::serialize_ciphertext(him::add(pub, a, b)));
      return 0;
    }

    if (*add_plain_cmd) {
      him::PublicKey pub = him::parse_public_key(read_input(addp.pub));
      him::Ciphertext a = him::parse_ciphertext(read_input(addp.ct));
      write_output(addp.out, him::serialize_ciphertext(
                                 him::add_plain(pub, a, him::parse_integer(addp.value))));
      return 0;
    }

    if (*scalar_mul_cmd) {
      him::PublicKey pub = him::parse_public_key(read_input(smul.pub));
      him::Ciphertext a = him::parse_ciphertext(read_input(smul.ct));
      write_output(smul.out, him::serialize_ciphertext(him::scalar_mul(
                                 pub, a, him::parse_integer(smul.scalar))));
      return 0;
    }

    if (*bootstrap_cmd) {
      him::PublicKey pub = him::parse_public_key(read_input(boot.pub));
      him::Ciphertext a = him::parse_ciphertext(read_input(boot.ct));
      him::RationalSequence seq = parse_offsets(boot.offsets);
      write_output(boot.out, him::serialize_ciphertext(him::bootstrap(pub, a, seq)));
      return 0;
    }

    if (*unbootstrap_cmd) {
      him::Ciphertext a = him::parse_ciphertext(read_input(unboot.ct));
      write_output(unboot.out, him::serialize_ciphertext(him::unbootstrap(a)));
      return 0;
    }

    if (*decrypt_cmd) {
      him::KeyPair kp = him::parse_secret_key(read_input(dec.priv));
      him::Ciphertext ct = him::parse_ciphertext(read_input(dec.ct));
      write_output(dec.out, him::decrypt(kp, ct).str() + "\n");
      return 0;
    }

    if (*decrypt_matrix_cmd) {
      him::KeyPair kp = him::parse_secret_key(read_input(decm.priv));
      him::CipherMatrix cm = him::parse_cipher_matrix(read_input(decm.cmx));
      write_output(decm.out, him::to_csv(him::decrypt_matrix(kp, cm)));
      return 0;
    }

    if (*demo_cmd) return run_demo(demo_json);
    if (*bench_cmd) return run_bench(ba);
  } catch (const him::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
