// Copyright 2026 The bincov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment orchestration: trials over generated instances, optimum
// resolution, ratio reports, trust-level sweeps and expected-ratio
// estimates.

#ifndef BINCOV_HARNESS_HPP_
#define BINCOV_HARNESS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bincov/bintypes.hpp"
#include "bincov/core.hpp"
#include "bincov/family.hpp"
#include "bincov/generators.hpp"
#include "bincov/onlinealgs.hpp"

namespace bincov {

inline constexpr const char* kReportSchema = "bincov-report-v1";
inline constexpr const char* kSweepSchema = "bincov-sweep-v1";

struct AlgSpec {
  std::string name = "dnf";  // dnf | pc | hybrid | popc
  Rational epsilon{1, 2};
  TrustLevel lambda{1, 2};
  Rational delta{1, 2};
  std::string inner = "dnf";
};

struct GeneratorSpec {
  Family family = Family::kStochastic;
  int k = 2;
  std::int64_t n = 0;
  int i = 1;
  std::optional<SizeSet> sizes;                 // stochastic only
  std::optional<std::vector<Rational>> distribution;  // stochastic only; uniform when absent
};

enum class PredictionMode { kPerfect, kGenerator, kExplicit, kPerturbed };

enum class OptMode { kAuto, kExact, kAnalytic, kProvided };

struct ExperimentConfig {
  AlgSpec alg;
  GeneratorSpec gen;
  int trials = 1;
  std::uint64_t seed = 0;
  PredictionMode predictionMode = PredictionMode::kPerfect;
  std::optional<std::vector<Rational>> prediction;  // kExplicit
  Rational eta{0};                                  // kPerturbed
  OptMode optMode = OptMode::kAuto;
  std::optional<std::int64_t> providedOpt;
  unsigned workers = 0;  // 0: one per hardware thread, capped by trials
};

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  std::int64_t n = 0;
  std::int64_t profit = 0;
  std::optional<std::int64_t> opt;
  std::optional<Rational> ratio;
  std::int64_t g = 0;
  std::int64_t extraBins = 0;
  std::string error;
};

struct RatioReport {
  std::string alg;
  std::string family;
  int k = 0;
  std::optional<Rational> epsilon;
  std::optional<TrustLevel> lambda;
  std::optional<Rational> delta;
  std::vector<TrialRow> rows;

  std::optional<Rational> minRatio() const;
  std::optional<Rational> meanRatio() const;
  /// Nearest-rank empirical quantile of the defined ratios, q in [0, 1].
  std::optional<Rational> quantile(const Rational& q) const;
};

/// The built-in optimum when one is known, otherwise exact search for
/// n <= 12 k. Returns nullopt when neither applies.
std::optional<std::int64_t> resolveOpt(const Instance& sigma, std::optional<std::int64_t> known,
                                       OptMode mode = OptMode::kAuto);

/// Runs one algorithm on one instance. `prediction` is required for pc and hybrid.
RunRecord runAlgorithm(const AlgSpec& spec, const Instance& sigma,
                       const std::optional<FrequencyVector>& prediction,
                       std::shared_ptr<const BinTypeCatalog> catalog = nullptr);

GeneratedInstance generate(const GeneratorSpec& spec, std::uint64_t seed);

RatioReport runExperiment(const ExperimentConfig& cfg);

void writeReportCsv(std::ostream& out, const RatioReport& report);

/// 1/2 + 1/H_{k-1}.
Rational hBound(int k);

/// Additive constant of the hybrid guarantee with inner Dual-Next-Fit:
/// 1/2 + m^2 + m + k kappa + (ell - 1)(k + tau) with m = m_{k,eps}.
Rational hybridAdditive(const BinTypeCatalog& catalog, const Rational& epsilon, TrustLevel lambda);

/// Worst-case guarantee profit >= c opt - b of an algorithm.
struct Guarantee {
  Rational c;
  Rational b;
  bool holds(std::int64_t profit, std::int64_t opt) const { return Rational(profit) >= c * opt - b; }
};

/// Deterministic guarantee for `spec`; nullopt for popc, whose guarantee
/// only holds with probability.
std::optional<Guarantee> guaranteeFor(const AlgSpec& spec, const BinTypeCatalog& catalog,
                                      bool perfectPrediction);

struct SweepCase {
  std::string label;
  std::shared_ptr<const Instance> sigma;
  FrequencyVector prediction;
  bool perfect = false;
  std::int64_t opt = 0;
};

struct SweepCaseResult {
  std::string label;
  bool perfect = false;
  std::int64_t profit = 0;
  std::int64_t opt = 0;
  Rational ratio;
  bool consistencyOk = true;  // only meaningful for perfect cases
  bool robustnessOk = true;
};

struct SweepRow {
  TrustLevel lambda;
  Rational b;
  Rational consistency;      // min ratio over perfect cases
  Rational robustness;       // min ratio over all cases
  Rational consistencyLine;  // lambda (1 - eps) + (1 - lambda) / 2
  Rational robustnessLine;   // (1 - lambda) / 2
  bool consistencyOk = true;
  bool robustnessOk = true;
  std::vector<SweepCaseResult> cases;
};

struct SweepReport {
  Rational epsilon;
  std::vector<SweepRow> rows;
  bool allOk() const;
};

/// Adversarial predictions for a size set: every point mass, perturbations
/// of `truth` at eta in {1/2, 1, 3/2}, and the two-size "half small, half
/// large" prediction when 1/k and (k-1)/k are distinct members of S.
std::vector<std::pair<std::string, FrequencyVector>> adversarialPredictions(
    const SizeSet& sizes, const FrequencyVector& truth, std::uint64_t seed);

/// Runs hybrid (inner Dual-Next-Fit) for every trust level on every case.
SweepReport sweepLambda(const std::vector<TrustLevel>& lambdas, const Rational& epsilon,
                        const std::vector<SweepCase>& cases, unsigned workers = 0);

void writeSweepCsv(std::ostream& out, const SweepReport& report);

struct EarEstimate {
  Rational mean;
  double standardError = 0;
  int used = 0;
  int excluded = 0;  // trials with opt = 0
  std::vector<TrialRow> rows;
};

/// Mean and standard error of profit/opt over seeded i.i.d. instances.
/// pc and hybrid receive the distribution itself as their prediction.
EarEstimate expectedRatioMC(const AlgSpec& spec, const Distribution& d, std::int64_t n, int trials,
                            std::uint64_t seed, unsigned workers = 0);

}  // namespace bincov

#endif  // BINCOV_HARNESS_HPP_
