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

#ifndef HIM_BENCH_HPP
#define HIM_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include <sys/utsname.h>

#include <json.hpp>

#include "him/bootstrap.hpp"
#include "him/cipher.hpp"
#include "him/eval.hpp"
#include "him/keys.hpp"
#include "him/serialize.hpp"

namespace him::bench {

enum class NoiseGrowth { VeryLow, Low, Moderate, High };

enum class Workload { PaperProtocol, ScalingProbe };

inline const char* noise_growth_name(NoiseGrowth g) {
  switch (g) {
    case NoiseGrowth::VeryLow: return "Very Low";
    case NoiseGrowth::Low: return "Low";
    case NoiseGrowth::Moderate: return "Moderate";
    case NoiseGrowth::High: return "High";
  }
  return "?";
}

struct BenchConfig {
  Integer dataset_min = 1;
  Integer dataset_max = 100;
  unsigned repetitions = 3;
  std::vector<unsigned> deltas = {32};
  std::vector<unsigned> gammas = {64};
  std::vector<unsigned> betas = {2};
  Mode mode = Mode::Literal;
  std::uint64_t seed = 1;
  Workload workload = Workload::PaperProtocol;
};

struct PhaseStats {
  std::vector<double> samples_ms;  // one entry per repetition, wall total
  double mean_ms = 0, min_ms = 0, max_ms = 0;

  void finalize() {
    if (samples_ms.empty()) return;
    min_ms = *std::min_element(samples_ms.begin(), samples_ms.end());
    max_ms = *std::max_element(samples_ms.begin(), samples_ms.end());
    double total = 0;
    for (double s : samples_ms) total += s;
    mean_ms = total / static_cast<double>(samples_ms.size());
  }
};

/// One measured run of the protocol workload at a single (delta, gamma, beta)
/// point. Timing fields are wall totals per phase over the whole dataset.
struct BenchReport {
  unsigned delta = 0, gamma = 0, beta = 0;
  Mode mode = Mode::Literal;
  std::uint64_t seed = 0;
  Integer dataset_min, dataset_max;
  unsigned repetitions = 0;
  PhaseStats keygen, encrypt, evaluate, bootstrap, decrypt;
  double ciphertext_size_bytes = 0;  // mean over the freshly encrypted dataset
  NoiseGrowth noise_growth = NoiseGrowth::VeryLow;
  double overhead_ratio = 0;  // evaluate wall / encrypt wall
  std::string environment;

  double ciphertext_size_kb() const {
    return std::round(ciphertext_size_bytes / 1024.0 * 100.0) / 100.0;
  }
};

inline std::string environment_descriptor() {
  if (const char* env = std::getenv("HIM_BENCH_ENV")) {
    if (*env != '\0') return env;
  }
  std::string out;
  utsname u{};
  if (uname(&u) == 0) {
    out = std::string(u.sysname) + " " + u.release + " " + u.machine;
  } else {
    out = "unknown host";
  }
  out += ", " + std::to_string(std::thread::hardware_concurrency()) + " hardware threads";
#if defined(__clang__)
  out += ", clang " + std::to_string(__clang_major__) + "." + std::to_string(__clang_minor__);
#elif defined(__GNUC__)
  out += ", gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#endif
  return out;
}

/// The experimental dataset: every integer in [dataset_min, dataset_max], in
/// order.
inline std::vector<Integer> gen_dataset(const BenchConfig& config) {
  if (config.dataset_min > config.dataset_max)
    raise(ErrorCode::InvalidBounds, "dataset_min exceeds dataset_max");
  std::vector<Integer> out;
  for (Integer d = config.dataset_min; d <= config.dataset_max; ++d) out.push_back(d);
  return out;
}

inline std::size_t measure_ciphertext_size(const Ciphertext& ct) {
  return serialize_ciphertext(ct).size();
}

/// Ratio bands over rho = max post-evaluation noise bound / fresh bound,
/// sampled before bootstrapping.
inline NoiseGrowth classify_noise_growth(const Integer& fresh_bound,
                                         const Integer& max_post_bound) {
  if (max_post_bound <= 2 * fresh_bound) return NoiseGrowth::VeryLow;
  if (max_post_bound <= 8 * fresh_bound) return NoiseGrowth::Low;
  if (max_post_bound <= 64 * fresh_bound) return NoiseGrowth::Moderate;
  return NoiseGrowth::High;
}

namespace detail {

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace detail

/// Runs the protocol workload for one parameter point: keygen, encrypt every
/// dataset value, fold the dataset with pairwise adds plus one scalar_mul by
/// 2 per element, bootstrap each result once, decrypt everything, and verify
/// each decryption against plain-integer expectations before any statistics
/// are reported. Timings of wrong computations are meaningless, so a failed
/// verification aborts with VerificationFailed.
inline BenchReport run_benchmark(const BenchConfig& config) {
  if (config.workload != Workload::PaperProtocol)
    raise(ErrorCode::ConfigError, "scaling workloads run through scaling_probe");
  if (config.repetitions < 1) raise(ErrorCode::ConfigError, "repetitions must be >= 1");
  if (config.deltas.size() != 1 || config.gammas.size() != 1 || config.betas.size() != 1)
    raise(ErrorCode::ConfigError, "run_benchmark takes a single parameter point; use run_sweep");

  const std::vector<Integer> dataset = gen_dataset(config);

  SecurityParams params;
  params.delta = config.deltas.front();
  params.gamma = config.gammas.front();
  params.beta = config.betas.front();
  params.mask_mode = MaskMode::Zero;
  params.d_max = config.dataset_max + 1;
  if (params.d_max < 1) params.d_max = 1;
  validate_params(params);

  Integer oracle_sum = 0;
  for (const Integer& d : dataset) oracle_sum += d;

  BenchReport report;
  report.delta = params.delta;
  report.gamma = params.gamma;
  report.beta = params.beta;
  report.mode = config.mode;
  report.seed = config.seed;
  report.dataset_min = config.dataset_min;
  report.dataset_max = config.dataset_max;
  report.repetitions = config.repetitions;
  report.environment = environment_descriptor();

  for (unsigned rep = 0; rep < config.repetitions; ++rep) {
    Rng rng(config.seed);

    detail::StopWatch t_keygen;
    KeyPair kp = keygen(params, rng);
    report.keygen.samples_ms.push_back(t_keygen.elapsed_ms());

    detail::StopWatch t_encrypt;
    std::vector<Ciphertext> cts;
    cts.reserve(dataset.size());
    for (const Integer& d : dataset) cts.push_back(encrypt(kp.pub, d, config.mode));
    report.encrypt.samples_ms.push_back(t_encrypt.elapsed_ms());

    if (rep == 0) {
      std::size_t total = 0;
      for (const Ciphertext& ct : cts) total += measure_ciphertext_size(ct);
      report.ciphertext_size_bytes =
          static_cast<double>(total) / static_cast<double>(cts.size());
    }

    detail::StopWatch t_evaluate;
    Ciphertext fold = cts.front();
    for (std::size_t i = 1; i < cts.size(); ++i) fold = add(kp.pub, fold, cts[i]);
    std::vector<Ciphertext> doubled;
    doubled.reserve(cts.size());
    for (const Ciphertext& ct : cts) doubled.push_back(scalar_mul(kp.pub, ct, 2));
    report.evaluate.samples_ms.push_back(t_evaluate.elapsed_ms());

    if (rep == 0) {
      Integer max_post = fold.noise_bound;
      for (const Ciphertext& ct : doubled)
        if (ct.noise_bound > max_post) max_post = ct.noise_bound;
      report.noise_growth = classify_noise_growth(kp.pub.blind, max_post);
    }

    detail::StopWatch t_bootstrap;
    Rng seq_rng(config.seed ^ 0xb005757a9ULL);
    RationalSequence seq = gen_rational_sequence(2, seq_rng);
    Ciphertext boot_fold = bootstrap(kp.pub, fold, seq);
    std::vector<Ciphertext> boot_doubled;
    boot_doubled.reserve(doubled.size());
    for (const Ciphertext& ct : doubled) boot_doubled.push_back(bootstrap(kp.pub, ct, seq));
    report.bootstrap.samples_ms.push_back(t_bootstrap.elapsed_ms());

    detail::StopWatch t_decrypt;
    Integer recovered_sum = decrypt(kp, boot_fold);
    std::vector<Integer> recovered_doubled;
    recovered_doubled.reserve(boot_doubled.size());
    for (const Ciphertext& ct : boot_doubled) recovered_doubled.push_back(decrypt(kp, ct));
    report.decrypt.samples_ms.push_back(t_decrypt.elapsed_ms());

    if (recovered_sum != oracle_sum)
      raise(ErrorCode::VerificationFailed,
            "decrypt phase, fold result: got " + recovered_sum.str() + ", expected " +
                oracle_sum.str());
    for (std::size_t i = 0; i < recovered_doubled.size(); ++i) {
      const Integer expected = 2 * dataset[i];
      if (recovered_doubled[i] != expected)
        raise(ErrorCode::VerificationFailed,
              "decrypt phase, index " + std::to_string(i) + ": got " +
                  recovered_doubled[i].str() + ", expected " + expected.str());
    }
  }

  report.keygen.finalize();
  report.encrypt.finalize();
  report.evaluate.finalize();
  report.bootstrap.finalize();
  report.decrypt.finalize();
  report.overhead_ratio =
      report.evaluate.mean_ms / std::max(report.encrypt.mean_ms, 1e-9);
  return report;
}

/// Cross-product sweep over the configured delta/gamma/beta lists.
inline std::vector<BenchReport> run_sweep(const BenchConfig& config) {
  if (config.deltas.empty() || config.gammas.empty() || config.betas.empty())
    raise(ErrorCode::ConfigError, "empty parameter sweep list");
  std::vector<BenchReport> reports;
  for (unsigned delta : config.deltas) {
    for (unsigned gamma : config.gammas) {
      for (unsigned beta : config.betas) {
        BenchConfig point = config;
        point.deltas = {delta};
        point.gammas = {gamma};
        point.betas = {beta};
        reports.push_back(run_benchmark(point));
      }
    }
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Scaling probe

struct ScalingRow {
  std::string phase;
  std::vector<double> median_ms;  // one per probed delta
  double slope = 0;               // log2(time) vs log2(delta) least squares
  double residual = 0;            // RMS residual of the fit
};

struct ScalingTable {
  std::vector<unsigned> deltas;
  std::vector<ScalingRow> rows;
};

namespace detail {

template <typename Op>
double time_per_op_ms(Op&& op, double min_sample_ms) {
  std::size_t iters = 1;
  for (;;) {
    StopWatch watch;
    for (std::size_t i = 0; i < iters; ++i) op();
    double elapsed = watch.elapsed_ms();
    if (elapsed >= min_sample_ms || iters >= (1u << 22))
      return elapsed / static_cast<double>(iters);
    iters *= 4;
  }
}

template <typename Op>
double median_op_ms(Op&& op, int samples = 3, double min_sample_ms = 10.0) {
  std::vector<double> xs;
  xs.reserve(samples);
  for (int i = 0; i < samples; ++i) xs.push_back(time_per_op_ms(op, min_sample_ms));
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

inline void fit_loglog(const std::vector<unsigned>& deltas, ScalingRow& row) {
  const std::size_t n = deltas.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = std::log2(static_cast<double>(deltas[i]));
    ys[i] = std::log2(std::max(row.median_ms[i], 1e-12));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  row.slope = sxy / sxx;
  double intercept = my - row.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double err = ys[i] - (row.slope * xs[i] + intercept);
    ss += err * err;
  }
  row.residual = std::sqrt(ss / static_cast<double>(n));
}

}  // namespace detail

/// Empirical complexity probe: times keygen/encrypt/add/scalar_mul/decrypt at
/// each delta (batched around a monotonic clock so per-op costs far below the
/// timer tick still measure), then fits a log-log slope per phase.
inline ScalingTable scaling_probe(const std::vector<unsigned>& deltas,
                                  const BenchConfig& config) {
  if (deltas.size() < 4)
    raise(ErrorCode::InsufficientPoints, "need at least 4 delta values");
  unsigned lo = *std::min_element(deltas.begin(), deltas.end());
  unsigned hi = *std::max_element(deltas.begin(), deltas.end());
  if (lo == 0 || hi < 8 * lo)
    raise(ErrorCode::InsufficientPoints, "delta values must span at least 3 octaves");

  ScalingTable table;
  table.deltas = deltas;
  table.rows = {{"keygen", {}, 0, 0},
                {"encrypt", {}, 0, 0},
                {"add", {}, 0, 0},
                {"scalar_mul", {}, 0, 0},
                {"decrypt", {}, 0, 0}};

  for (unsigned delta : deltas) {
    SecurityParams params;
    params.delta = delta;
    params.gamma = 2 * delta;
    params.beta = 2;
    params.mask_mode = MaskMode::Zero;
    params.d_max = Integer(1) << 20;
    validate_params(params);

    std::uint64_t keygen_seed = config.seed;
    auto keygen_op = [&] {
      Rng rng(keygen_seed++);
      KeyPair kp = keygen(params, rng);
      (void)kp;
    };

    Rng rng(config.seed);
    KeyPair kp = keygen(params, rng);
    const Integer d1 = 12345 % params.d_max;
    const Integer d2 = 6789 % params.d_max;
    const Ciphertext ct1 = encrypt(kp.pub, d1);
    const Ciphertext ct2 = encrypt(kp.pub, d2);
    const Ciphertext ct_sum = add(kp.pub, ct1, ct2);

    table.rows[0].median_ms.push_back(detail::median_op_ms(keygen_op));
    table.rows[1].median_ms.push_back(
        detail::median_op_ms([&] { (void)encrypt(kp.pub, d1); }));
    table.rows[2].median_ms.push_back(
        detail::median_op_ms([&] { (void)add(kp.pub, ct1, ct2); }));
    table.rows[3].median_ms.push_back(
        detail::median_op_ms([&] { (void)scalar_mul(kp.pub, ct1, 2); }));
    table.rows[4].median_ms.push_back(
        detail::median_op_ms([&] { (void)decrypt(kp, ct_sum); }));
  }

  for (ScalingRow& row : table.rows) detail::fit_loglog(deltas, row);
  return table;
}

// ---------------------------------------------------------------------------
// Report emission

enum class ReportFormat { CSV, MarkdownTable, JSONDoc };

struct ReferenceRow {
  const char* method;
  int encryption_ms;
  int decryption_ms;
  const char* noise_growth;
  const char* overhead;
  int size_kb;
};

/// Previously reported results for context. These are transcriptions, not
/// measurements, and are never asserted against.
inline const std::vector<ReferenceRow>& paper_reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {"Kim et al.", 50, 200, "Moderate", "Low", 5},
      {"Xu et al.", 45, 180, "Moderate", "Moderate", 7},
      {"Agrawal et al.", 30, 150, "Low", "Low", 6},
      {"Zhang et al.", 40, 160, "Low", "High", 8},
      {"Proposed Method", 35, 140, "Very Low", "Low", 4},
  };
  return rows;
}

inline const char* overhead_label(double ratio) {
  if (ratio < 1.0) return "Low";
  if (ratio < 3.0) return "Moderate";
  return "High";
}

namespace detail {

inline const PhaseStats& phase_by_name(const BenchReport& r, const std::string& name) {
  if (name == "keygen") return r.keygen;
  if (name == "encrypt") return r.encrypt;
  if (name == "evaluate") return r.evaluate;
  if (name == "bootstrap") return r.bootstrap;
  return r.decrypt;
}

}  // namespace detail

inline const std::vector<std::string>& phase_names() {
  static const std::vector<std::string> names = {"keygen", "encrypt", "evaluate",
                                                 "bootstrap", "decrypt"};
  return names;
}

inline std::string emit_report(const std::vector<BenchReport>& reports,
                               ReportFormat format, bool include_paper_rows = false) {
  if (reports.empty()) raise(ErrorCode::ConfigError, "no reports to emit");

  if (format == ReportFormat::CSV) {
    std::string out = "phase,repetition,delta,gamma,ms\n";
    for (const BenchReport& r : reports) {
      for (const std::string& phase : phase_names()) {
        const PhaseStats& stats = detail::phase_by_name(r, phase);
        for (std::size_t rep = 0; rep < stats.samples_ms.size(); ++rep) {
          out += phase + "," + std::to_string(rep + 1) + "," + std::to_string(r.delta) +
                 "," + std::to_string(r.gamma) + "," +
                 detail::fmt(stats.samples_ms[rep], 6) + "\n";
        }
      }
    }
    return out;
  }

  if (format == ReportFormat::JSONDoc) {
    Json doc = Json::array();
    for (const BenchReport& r : reports) {
      Json j;
      j["delta"] = r.delta;
      j["gamma"] = r.gamma;
      j["beta"] = r.beta;
      j["mode"] = mode_name(r.mode);
      j["seed"] = r.seed;
      j["dataset_min"] = r.dataset_min.str();
      j["dataset_max"] = r.dataset_max.str();
      j["repetitions"] = r.repetitions;
      for (const std::string& phase : phase_names()) {
        const PhaseStats& stats = detail::phase_by_name(r, phase);
        Json p;
        p["mean_ms"] = stats.mean_ms;
        p["min_ms"] = stats.min_ms;
        p["max_ms"] = stats.max_ms;
        p["samples_ms"] = stats.samples_ms;
        j["phases"][phase] = std::move(p);
      }
      j["ciphertext_size_bytes"] = r.ciphertext_size_bytes;
      j["ciphertext_size_kb"] = r.ciphertext_size_kb();
      j["noise_growth"] = noise_growth_name(r.noise_growth);
      j["overhead_ratio"] = r.overhead_ratio;
      j["overhead"] = overhead_label(r.overhead_ratio);
      j["environment"] = r.environment;
      doc.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
  }

  // MarkdownTable
  std::string out = "# Benchmark report\n\n";
  out += "Environment: " + reports.front().environment + "\n\n";
  for (const BenchReport& r : reports) {
    out += "Config: dataset [" + r.dataset_min.str() + ", " + r.dataset_max.str() +
           "], repetitions " + std::to_string(r.repetitions) + ", delta " +
           std::to_string(r.delta) + ", gamma " + std::to_string(r.gamma) + ", beta " +
           std::to_string(r.beta) + ", mode " + mode_name(r.mode) + ", seed " +
           std::to_string(r.seed) + "\n";
  }
  out += "\n| Method | Encryption Time (ms) | Decryption Time (ms) | Noise Growth | "
         "Computational Overhead | Ciphertext Size (KB) |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const BenchReport& r : reports) {
    out += "| Proposed Method | " + detail::fmt(r.encrypt.mean_ms, 3) + " | " +
           detail::fmt(r.decrypt.mean_ms, 3) + " | " + noise_growth_name(r.noise_growth) +
           " | " + overhead_label(r.overhead_ratio) + " | " +
           detail::fmt(r.ciphertext_size_kb(), 2) + " |\n";
  }
  if (include_paper_rows) {
    for (const ReferenceRow& row : paper_reference_rows()) {
      out += "| " + std::string(row.method) + " | " + std::to_string(row.encryption_ms) +
             " | " + std::to_string(row.decryption_ms) + " | " + row.noise_growth +
             " | " + row.overhead + " | " + std::to_string(row.size_kb) + " |\n";
    }
    out += "\nRows after the measured \"Proposed Method\" row(s) are reference values "
           "transcribed from previously reported results; this harness never measures "
           "or asserts them.\n";
  }
  out += "\nTimes are wall totals per phase over the whole dataset, averaged over "
         "repetitions.\n";
  out += "\n## Phase timings (ms over repetitions)\n\n";
  out += "| Delta | Gamma | Phase | Mean | Min | Max |\n|---|---|---|---|---|---|\n";
  for (const BenchReport& r : reports) {
    for (const std::string& phase : phase_names()) {
      const PhaseStats& stats = detail::phase_by_name(r, phase);
      out += "| " + std::to_string(r.delta) + " | " + std::to_string(r.gamma) + " | " +
             phase + " | " + detail::fmt(stats.mean_ms, 3) + " | " +
             detail::fmt(stats.min_ms, 3) + " | " + detail::fmt(stats.max_ms, 3) +
             " |\n";
    }
  }
  return out;
}

inline std::string emit_scaling(const ScalingTable& table, ReportFormat format) {
  if (format == ReportFormat::CSV) {
    std::string out = "phase,delta,median_ms,slope,residual\n";
    for (const ScalingRow& row : table.rows) {
      for (std::size_t i = 0; i < table.deltas.size(); ++i) {
        out += row.phase + "," + std::to_string(table.deltas[i]) + "," +
               detail::fmt(row.median_ms[i], 9) + "," + detail::fmt(row.slope, 4) + "," +
               detail::fmt(row.residual, 4) + "\n";
      }
    }
    return out;
  }
  if (format == ReportFormat::JSONDoc) {
    Json j;
    j["deltas"] = table.deltas;
    Json rows = Json::array();
    for (const ScalingRow& row : table.rows) {
      Json r;
      r["phase"] = row.phase;
      r["median_ms"] = row.median_ms;
      r["slope"] = row.slope;
      r["residual"] = row.residual;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  std::string out = "## Scaling probe (log-log slope of time vs delta)\n\n";
  out += "| Phase | Slope | RMS residual |";
  for (unsigned d : table.deltas) out += " delta=" + std::to_string(d) + " (ms) |";
  out += "\n|---|---|---|";
  for (std::size_t i = 0; i < table.deltas.size(); ++i) out += "---|";
  out += "\n";
  for (const ScalingRow& row : table.rows) {
    out += "| " + row.phase + " | " + detail::fmt(row.slope, 3) + " | " +
           detail::fmt(row.residual, 3) + " |";
    for (double ms : row.median_ms) out += " " + detail::fmt(ms, 6) + " |";
    out += "\n";
  }
  return out;
}

}  // namespace him::bench

#endif  // HIM_BENCH_HPP
