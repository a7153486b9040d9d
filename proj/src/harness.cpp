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

#include "bincov/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "bincov/optcover.hpp"

namespace bincov {
namespace {

// Runs fn(0..count-1) on a bounded pool; each index is handled exactly once.
void parallelFor(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

std::optional<Rational> ratioOf(std::int64_t profit, std::optional<std::int64_t> opt) {
  if (!opt || *opt == 0) return std::nullopt;
  return Rational(profit, *opt);
}

std::string optionalText(const std::optional<Rational>& value) {
  return value ? formatRational(*value) : std::string();
}

}  // namespace

std::optional<Rational> RatioReport::minRatio() const {
  std::optional<Rational> best;
  for (const TrialRow& r : rows) {
    if (r.ratio && (!best || *r.ratio < *best)) best = r.ratio;
  }
  return best;
}

std::optional<Rational> RatioReport::meanRatio() const {
  Rational sum = 0;
  std::int64_t count = 0;
  for (const TrialRow& r : rows) {
    if (!r.ratio) continue;
    sum += *r.ratio;
    ++count;
  }
  if (count == 0) return std::nullopt;
  return sum / count;
}

std::optional<Rational> RatioReport::quantile(const Rational& q) const {
  if (q < 0 || q > 1) throw InvalidArgument("quantile must lie in [0, 1]");
  std::vector<Rational> values;
  for (const TrialRow& r : rows) {
    if (r.ratio) values.push_back(*r.ratio);
  }
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  BigInt rank = ceilOf(q * static_cast<std::int64_t>(values.size()));
  const std::int64_t idx = std::max<std::int64_t>(toInt64(rank), 1) - 1;
  return values[static_cast<std::size_t>(idx)];
}

std::optional<std::int64_t> resolveOpt(const Instance& sigma, std::optional<std::int64_t> known,
                                       OptMode mode) {
  const SizeSet& sizes = sigma.sizes();
  const CountVector counts = sigma.counts();
  switch (mode) {
    case OptMode::kProvided:
      if (!known) throw InvalidArgument("opt mode 'provided' needs a known optimum");
      return known;
    case OptMode::kAnalytic:
      if (known) return known;
      return closedFormOpt(sizes, counts);
    case OptMode::kExact:
      return optCover(counts, enumerateBinTypes(sizes)).profit;
    case OptMode::kAuto:
      break;
  }
  if (known) return known;
  if (auto closed = closedFormOpt(sizes, counts)) return closed;
  if (sigma.size() <= 12 * sizes.k()) return optCover(counts, enumerateBinTypes(sizes)).profit;
  return std::nullopt;
}

RunRecord runAlgorithm(const AlgSpec& spec, const Instance& sigma,
                       const std::optional<FrequencyVector>& prediction,
                       std::shared_ptr<const BinTypeCatalog> catalog) {
  if (!catalog) catalog = std::make_shared<const BinTypeCatalog>(enumerateBinTypes(sigma.sizes()));
  if (spec.name == "dnf") return dnfRun(sigma);
  if (spec.name == "popc") {
    Popc popc(catalog, spec.epsilon, spec.delta);
    for (std::size_t t = 0; t < sigma.size(); ++t) popc.place(static_cast<ItemId>(t), sigma[t]);
    return popc.finish();
  }
  if (spec.name != "pc" && spec.name != "hybrid") {
    throw InvalidArgument("unknown algorithm '" + spec.name + "'");
  }
  if (!prediction) throw InvalidArgument(spec.name + " needs a frequency prediction");
  if (spec.name == "pc") return pcRun(sigma, *catalog, *prediction, spec.epsilon);
  if (spec.inner != "dnf") throw InvalidArgument("unknown inner algorithm '" + spec.inner + "'");
  return hybridRun(sigma, *catalog, *prediction, spec.epsilon, spec.lambda);
}

GeneratedInstance generate(const GeneratorSpec& spec, std::uint64_t seed) {
  switch (spec.family) {
    case Family::kTradeoff1:
    case Family::kTradeoff2: {
      TradeoffPair pair = spec.sizes ? genTradeoffPair(*spec.sizes, spec.k, spec.n)
                                     : genTradeoffPair(spec.k, spec.n);
      return spec.family == Family::kTradeoff1 ? std::move(pair.first) : std::move(pair.second);
    }
    case Family::kImpossibility:
      return genImpossibility(spec.k, spec.n, spec.i);
    case Family::kAntiRobust:
      return spec.sizes ? genAntiRobust(*spec.sizes, spec.k, spec.n) : genAntiRobust(spec.k, spec.n);
    case Family::kStochastic:
      break;
  }
  if (!spec.sizes) throw InvalidArgument("stochastic generation needs a size set");
  const Distribution d = spec.distribution ? Distribution(*spec.sizes, *spec.distribution)
                                           : Distribution::uniform(*spec.sizes);
  return GeneratedInstance{Family::kStochastic, sampleStochastic(d, spec.n, seed), std::nullopt,
                           std::nullopt};
}

RatioReport runExperiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw InvalidArgument("an experiment needs at least one trial");
  const GeneratedInstance probe = generate(GeneratorSpec{cfg.gen.family, cfg.gen.k, 0, cfg.gen.i,
                                                         cfg.gen.sizes, cfg.gen.distribution},
                                           0);
  const SizeSet sizes = probe.sigma.sizes();
  auto catalog = std::make_shared<const BinTypeCatalog>(enumerateBinTypes(sizes));

  RatioReport report;
  report.alg = cfg.alg.name;
  report.family = familyName(cfg.gen.family);
  report.k = cfg.gen.family == Family::kStochastic ? static_cast<int>(sizes.k()) : cfg.gen.k;
  if (cfg.alg.name != "dnf") report.epsilon = cfg.alg.epsilon;
  if (cfg.alg.name == "hybrid") report.lambda = cfg.alg.lambda;
  if (cfg.alg.name == "popc") report.delta = cfg.alg.delta;
  report.rows.resize(static_cast<std::size_t>(cfg.trials));

  parallelFor(report.rows.size(), cfg.workers, [&](std::size_t t) {
    TrialRow& row = report.rows[t];
    row.trial = static_cast<int>(t);
    row.seed = trialSeed(cfg.seed, t);
    try {
      const GeneratedInstance g = generate(cfg.gen, row.seed);
      row.n = static_cast<std::int64_t>(g.sigma.size());
      std::optional<FrequencyVector> prediction;
      switch (cfg.predictionMode) {
        case PredictionMode::kPerfect:
        case PredictionMode::kPerturbed:
          if (!g.sigma.empty()) {
            prediction = frequencies(g.sigma);
          } else if (cfg.gen.distribution) {
            prediction = FrequencyVector(*cfg.gen.distribution);
          } else {
            prediction = g.prediction;
          }
          if (prediction && cfg.predictionMode == PredictionMode::kPerturbed) {
            prediction = perturbPrediction(*prediction, cfg.eta, row.seed);
          }
          break;
        case PredictionMode::kGenerator:
          prediction = g.prediction;
          break;
        case PredictionMode::kExplicit:
          if (cfg.prediction) prediction = FrequencyVector(*cfg.prediction);
          break;
      }
      RunRecord run = runAlgorithm(cfg.alg, g.sigma, prediction, catalog);
      row.profit = run.profit;
      row.g = run.g;
      row.extraBins = run.extraBins;
      row.opt = resolveOpt(g.sigma, cfg.providedOpt ? cfg.providedOpt : g.knownOpt, cfg.optMode);
      row.ratio = ratioOf(row.profit, row.opt);
    } catch (const Error& e) {
      row.error = e.what();
    }
  });
  return report;
}

void writeReportCsv(std::ostream& out, const RatioReport& report) {
  out << "schema,alg,family,k,n,eps,lambda,delta,seed,profit,opt,ratio,g,extra_bins\n";
  for (const TrialRow& r : report.rows) {
    out << kReportSchema << ',' << report.alg << ',' << report.family << ',' << report.k << ','
        << r.n << ',' << optionalText(report.epsilon) << ','
        << (report.lambda ? report.lambda->toString() : std::string()) << ','
        << optionalText(report.delta) << ',' << r.seed << ',';
    if (!r.error.empty()) {
      out << ",,,,\n";
      continue;
    }
    out << r.profit << ',' << (r.opt ? std::to_string(*r.opt) : std::string()) << ','
        << (r.ratio ? toDecimal(*r.ratio, 6) : std::string()) << ',' << r.g << ',' << r.extraBins
        << '\n';
  }
}

Rational hBound(int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  Rational h = 0;
  for (int i = 1; i <= k - 1; ++i) h += Rational(1, i);
  return Rational(1, 2) + 1 / h;
}

Rational hybridAdditive(const BinTypeCatalog& catalog, const Rational& epsilon, TrustLevel lambda) {
  const auto k = static_cast<std::int64_t>(catalog.sizes().k());
  const auto tau = static_cast<std::int64_t>(catalog.tauS());
  const std::int64_t m =
      toInt64(ceilOf(Rational(3 * tau * static_cast<std::int64_t>(catalog.tauSmax())) / epsilon)) + k;
  return Rational(1, 2) + Rational(m * m + m + k * lambda.kappa + (lambda.ell - 1) * (k + tau));
}

std::optional<Guarantee> guaranteeFor(const AlgSpec& spec, const BinTypeCatalog& catalog,
                                      bool perfectPrediction) {
  if (spec.name == "dnf") return Guarantee{Rational(1, 2), Rational(1, 2)};
  if (spec.name == "pc") {
    if (!perfectPrediction) return Guarantee{Rational(0), Rational(0)};
    const auto k = static_cast<std::int64_t>(catalog.sizes().k());
    const std::int64_t m =
        toInt64(ceilOf(Rational(3 * static_cast<std::int64_t>(catalog.tauS()) *
                                static_cast<std::int64_t>(catalog.tauSmax())) /
                       spec.epsilon)) +
        k;
    return Guarantee{1 - spec.epsilon, Rational(m * m + m)};
  }
  if (spec.name == "hybrid") {
    const Rational lambda = spec.lambda.value();
    const Rational b = hybridAdditive(catalog, spec.epsilon, spec.lambda);
    if (perfectPrediction) return Guarantee{lambda * (1 - spec.epsilon) + (1 - lambda) / 2, b};
    return Guarantee{(1 - lambda) / 2, b};
  }
  return std::nullopt;
}

bool SweepReport::allOk() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SweepRow& r) { return r.consistencyOk && r.robustnessOk; });
}

std::vector<std::pair<std::string, FrequencyVector>> adversarialPredictions(
    const SizeSet& sizes, const FrequencyVector& truth, std::uint64_t seed) {
  std::vector<std::pair<std::string, FrequencyVector>> out;
  const std::vector<std::string> names = sizes.toStrings();
  for (std::size_t i = 0; i < sizes.k(); ++i) {
    std::vector<Rational> f(sizes.k(), Rational(0));
    f[i] = 1;
    out.emplace_back("point:" + names[i], FrequencyVector(std::move(f)));
  }
  for (const Rational& eta : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
    try {
      out.emplace_back("perturbed:" + formatRational(eta), perturbPrediction(truth, eta, seed));
    } catch (const InvalidArgument&) {
      // Not enough movable mass at this distance.
    }
  }
  // Tradeoff and anti-robust predictions: half 1/j, half (j-1)/j.
  for (std::size_t i = 0; i < sizes.k(); ++i) {
    const Rational& v = sizes[i].value();
    if (boost::multiprecision::numerator(v) != 1 || boost::multiprecision::denominator(v) < 3) continue;
    const auto large = sizes.indexOf(1 - v);
    if (!large) continue;
    std::vector<Rational> f(sizes.k(), Rational(0));
    f[i] = Rational(1, 2);
    f[*large] = Rational(1, 2);
    out.emplace_back("half-small-half-large:" + names[i], FrequencyVector(std::move(f)));
  }
  return out;
}

SweepReport sweepLambda(const std::vector<TrustLevel>& lambdas, const Rational& epsilon,
                        const std::vector<SweepCase>& cases, unsigned workers) {
  if (cases.empty()) throw InvalidArgument("a sweep needs at least one case");
  const SizeSet& sizes = cases.front().sigma->sizes();
  auto catalog = std::make_shared<const BinTypeCatalog>(enumerateBinTypes(sizes));

  SweepReport report{epsilon, {}};
  report.rows.resize(lambdas.size());
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    SweepRow& row = report.rows[l];
    row.lambda = lambdas[l];
    row.b = hybridAdditive(*catalog, epsilon, row.lambda);
    const Rational lambda = row.lambda.value();
    row.consistencyLine = lambda * (1 - epsilon) + (1 - lambda) / 2;
    row.robustnessLine = (1 - lambda) / 2;
    row.cases.resize(cases.size());
  }

  parallelFor(lambdas.size() * cases.size(), workers, [&](std::size_t job) {
    SweepRow& row = report.rows[job / cases.size()];
    const SweepCase& c = cases[job % cases.size()];
    const RunRecord run = hybridRun(*c.sigma, *catalog, c.prediction, epsilon, row.lambda);
    SweepCaseResult& r = row.cases[job % cases.size()];
    r.label = c.label;
    r.perfect = c.perfect;
    r.profit = run.profit;
    r.opt = c.opt;
    r.ratio = c.opt == 0 ? Rational(1) : Rational(run.profit, c.opt);
    const Rational profit(run.profit);
    r.robustnessOk = profit >= row.robustnessLine * c.opt - row.b;
    r.consistencyOk = !c.perfect || profit >= row.consistencyLine * c.opt - row.b;
  });

  for (SweepRow& row : report.rows) {
    bool anyPerfect = false;
    row.robustness = 1;
    row.consistency = 1;
    for (const SweepCaseResult& r : row.cases) {
      row.robustness = std::min(row.robustness, r.ratio);
      if (r.perfect) {
        row.consistency = anyPerfect ? std::min(row.consistency, r.ratio) : r.ratio;
        anyPerfect = true;
      }
      row.consistencyOk = row.consistencyOk && r.consistencyOk;
      row.robustnessOk = row.robustnessOk && r.robustnessOk;
    }
  }
  return report;
}

void writeSweepCsv(std::ostream& out, const SweepReport& report) {
  out << "schema,eps,lambda,b,consistency,consistency_line,consistency_ok,robustness,"
         "robustness_line,robustness_ok\n";
  for (const SweepRow& r : report.rows) {
    out << kSweepSchema << ',' << formatRational(report.epsilon) << ',' << r.lambda.toString() << ','
        << formatRational(r.b) << ',' << toDecimal(r.consistency, 6) << ','
        << formatRational(r.consistencyLine) << ',' << (r.consistencyOk ? 1 : 0) << ','
        << toDecimal(r.robustness, 6) << ',' << formatRational(r.robustnessLine) << ','
        << (r.robustnessOk ? 1 : 0) << '\n';
  }
}

EarEstimate expectedRatioMC(const AlgSpec& spec, const Distribution& d, std::int64_t n, int trials,
                            std::uint64_t seed, unsigned workers) {
  if (trials < 2) throw InvalidArgument("the estimate needs at least two trials");
  if (n < 1) throw InvalidArgument("n must be positive");
  auto catalog = std::make_shared<const BinTypeCatalog>(enumerateBinTypes(d.sizes()));
  const FrequencyVector prediction = d.asFrequencies();

  EarEstimate est;
  est.rows.resize(static_cast<std::size_t>(trials));
  parallelFor(est.rows.size(), workers, [&](std::size_t t) {
    TrialRow& row = est.rows[t];
    row.trial = static_cast<int>(t);
    row.seed = trialSeed(seed, t);
    try {
      const Instance sigma = sampleStochastic(d, n, row.seed);
      row.n = n;
      const RunRecord run = runAlgorithm(spec, sigma, prediction, catalog);
      row.profit = run.profit;
      row.g = run.g;
      row.extraBins = run.extraBins;
      row.opt = resolveOpt(sigma, std::nullopt);
      row.ratio = ratioOf(row.profit, row.opt);
    } catch (const Error& e) {
      row.error = e.what();
    }
  });

  Rational sum = 0;
  std::vector<double> values;
  for (const TrialRow& r : est.rows) {
    if (!r.ratio) {
      ++est.excluded;
      continue;
    }
    sum += *r.ratio;
    values.push_back(toDouble(*r.ratio));
  }
  est.used = static_cast<int>(values.size());
  if (est.used == 0) return est;
  est.mean = sum / est.used;
  if (est.used >= 2) {
    const double mean = toDouble(est.mean);
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    est.standardError = std::sqrt(ss / (est.used - 1)) / std::sqrt(static_cast<double>(est.used));
  }
  return est;
}

}  // namespace bincov
