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

// bincov command-line interface.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bincov/bintypes.hpp"
#include "bincov/generators.hpp"
#include "bincov/harness.hpp"
#include "bincov/json_io.hpp"
#include "bincov/onlinealgs.hpp"
#include "bincov/optcover.hpp"

namespace {

using namespace bincov;

constexpr int kCheckFailed = 2;

std::vector<Rational> parseList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(parseRational(part));
  return out;
}

std::uint64_t resolveSeed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("BINCOV_SEED")) return std::stoull(env);
  return 0;
}

bool isCsv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

InstanceFile readInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  return instanceFromJson(Json::parse(in));
}

struct Common {
  std::string alg = "dnf";
  std::string eps = "1/2";
  std::string lambda = "1/2";
  std::string delta = "1/2";
  std::string inner = "dnf";

  void add(CLI::App* app) {
    app->add_option("--alg", alg, "dnf | pc | hybrid | popc")
        ->check(CLI::IsMember({"dnf", "pc", "hybrid", "popc"}));
    app->add_option("--eps", eps, "epsilon in (0,1)");
    app->add_option("--lambda", lambda, "trust level kappa/ell");
    app->add_option("--delta", delta, "confidence parameter in (0,1)");
    app->add_option("--inner", inner, "online algorithm inside hybrid")->check(CLI::IsMember({"dnf"}));
  }

  AlgSpec spec() const {
    AlgSpec s;
    s.name = alg;
    s.epsilon = parseRational(eps);
    s.lambda = TrustLevel::parse(lambda);
    s.delta = parseRational(delta);
    s.inner = inner;
    return s;
  }
};

struct GenArgs {
  std::string family = "stochastic";
  int k = 2;
  std::int64_t n = 0;
  int i = 1;
  std::string sizes;
  std::string dist;

  void add(CLI::App* app, bool familyRequired) {
    auto* f = app->add_option("--family", family,
                              "tradeoff1 | tradeoff2 | impossibility | anti-robust | stochastic");
    if (familyRequired) f->required();
    app->add_option("--k", k, "family parameter k");
    app->add_option("--n", n, "family length parameter");
    app->add_option("--i", i, "impossibility index, 1 <= i <= k-1");
    app->add_option("--sizes", sizes, "size set, e.g. 1/2,1");
    app->add_option("--dist", dist, "probabilities per size, e.g. 1/2,1/2");
  }

  GeneratorSpec spec() const {
    GeneratorSpec s;
    s.family = parseFamily(family);
    s.k = k;
    s.n = n;
    s.i = i;
    if (!sizes.empty()) s.sizes = parseSizeSet(sizes);
    if (!dist.empty()) s.distribution = parseList(dist);
    if (s.family == Family::kStochastic && s.sizes) s.k = static_cast<int>(s.sizes->k());
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online discrete bin covering with frequency predictions"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  GenArgs genArgs;
  genArgs.add(gen, true);
  std::uint64_t genSeed = 0;
  auto* genSeedFlag = gen->add_option("--seed", genSeed, "sampling seed");
  std::string genOut;
  gen->add_option("-o,--out", genOut, "output file (JSON)");

  // enumerate-types
  auto* types = app.add_subcommand("enumerate-types", "list the non-wasteful bin types of a size set");
  std::string typeSizes;
  std::size_t typeCap = kDefaultTypeCap;
  std::string typesOut;
  types->add_option("--sizes", typeSizes, "size set, e.g. 1/3,2/3")->required();
  types->add_option("--cap", typeCap, "maximum number of types");
  types->add_option("-o,--out", typesOut, "output file (JSON)");

  // opt
  auto* opt = app.add_subcommand("opt", "exact optimum of an instance");
  std::string optInstance;
  std::string optSizes;
  std::string optCounts;
  std::size_t optBudget = kDefaultNodeBudget;
  bool optCovering = false;
  std::string optOut;
  opt->add_option("--instance", optInstance, "instance JSON file");
  opt->add_option("--sizes", optSizes, "size set (with --counts)");
  opt->add_option("--counts", optCounts, "items per size (with --sizes)");
  opt->add_option("--budget", optBudget, "maximum search states");
  opt->add_flag("--covering", optCovering, "include a non-wasteful optimal covering");
  opt->add_option("-o,--out", optOut, "output file (JSON)");

  // run
  auto* run = app.add_subcommand("run", "run an algorithm on an instance or a generated family");
  Common runCommon;
  runCommon.add(run);
  GenArgs runGen;
  runGen.add(run, false);
  std::string runInstance;
  std::string runPred;
  std::string runEta = "0";
  std::string runOptMode = "auto";
  int runTrials = 1;
  unsigned runWorkers = 0;
  bool runCovering = false;
  bool runCheck = false;
  std::uint64_t runSeed = 0;
  std::string runOut;
  run->add_option("--instance", runInstance, "instance JSON file (single run)");
  run->add_option("--pred", runPred,
                  "prediction p1,...,pk, or perfect | generator | perturbed (uses --eta)");
  run->add_option("--eta", runEta, "L1 distance for --pred perturbed");
  run->add_option("--opt-mode", runOptMode, "auto | exact | analytic | provided")
      ->check(CLI::IsMember({"auto", "exact", "analytic", "provided"}));
  run->add_option("--trials", runTrials, "number of trials (family mode)");
  run->add_option("--workers", runWorkers, "worker threads (0: hardware)");
  run->add_flag("--covering", runCovering, "include the covering (single run)");
  run->add_flag("--check", runCheck, "exit 2 when a worst-case guarantee is violated");
  auto* runSeedFlag = run->add_option("--seed", runSeed, "base seed");
  run->add_option("-o,--out", runOut, "output file (.csv or .json)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "consistency and robustness of hybrid across trust levels");
  std::string sweepSizes = "1/2,1";
  std::string sweepDist;
  std::int64_t sweepN = 100000;
  std::string sweepEps = "1/2";
  std::string sweepLambdas = "0,1/4,1/2,3/4,1";
  std::string sweepFamily;
  int sweepK = 10;
  unsigned sweepWorkers = 0;
  bool sweepCheck = false;
  std::uint64_t sweepSeed = 0;
  std::string sweepOut;
  sweep->add_option("--sizes", sweepSizes, "size set for stochastic cases");
  sweep->add_option("--dist", sweepDist, "distribution for stochastic cases (default uniform)");
  sweep->add_option("--n", sweepN, "instance length");
  sweep->add_option("--eps", sweepEps, "epsilon in (0,1)");
  sweep->add_option("--lambdas", sweepLambdas, "comma separated trust levels kappa/ell");
  sweep->add_option("--family", sweepFamily, "tradeoff: use the tradeoff pair instead")
      ->check(CLI::IsMember({"", "tradeoff"}));
  sweep->add_option("--k", sweepK, "k for the tradeoff pair");
  sweep->add_option("--workers", sweepWorkers, "worker threads (0: hardware)");
  sweep->add_flag("--check", sweepCheck, "exit 2 when a guarantee line is violated");
  auto* sweepSeedFlag = sweep->add_option("--seed", sweepSeed, "sampling seed");
  sweep->add_option("-o,--out", sweepOut, "output file (.csv or .json)");

  // ear
  auto* ear = app.add_subcommand("ear", "Monte-Carlo estimate of the expected ratio");
  Common earCommon;
  earCommon.add(ear);
  std::string earSizes = "1/2,1";
  std::string earDist;
  std::int64_t earN = 10000;
  int earTrials = 100;
  unsigned earWorkers = 0;
  std::uint64_t earSeed = 0;
  std::string earOut;
  ear->add_option("--sizes", earSizes, "size set");
  ear->add_option("--dist", earDist, "distribution (default uniform)");
  ear->add_option("--n", earN, "instance length");
  ear->add_option("--trials", earTrials, "number of trials");
  ear->add_option("--workers", earWorkers, "worker threads (0: hardware)");
  auto* earSeedFlag = ear->add_option("--seed", earSeed, "base seed");
  ear->add_option("-o,--out", earOut, "output file (.csv or .json)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const GeneratedInstance g = generate(genArgs.spec(), resolveSeed(genSeedFlag, genSeed));
      emit(genOut, dump(instanceToJson(g)));
      return 0;
    }

    if (types->parsed()) {
      emit(typesOut, dump(catalogToJson(enumerateBinTypes(parseSizeSet(typeSizes), typeCap))));
      return 0;
    }

    if (opt->parsed()) {
      CountVector counts;
      std::optional<SizeSet> sizes;
      if (!optInstance.empty()) {
        InstanceFile file = readInstance(optInstance);
        sizes = file.sigma.sizes();
        counts = file.sigma.counts();
      } else {
        if (optSizes.empty() || optCounts.empty()) {
          throw InvalidArgument("opt needs --instance or both --sizes and --counts");
        }
        sizes = parseSizeSet(optSizes);
        std::vector<std::int64_t> c;
        for (const Rational& v : parseList(optCounts)) c.push_back(toInt64(numerator(v)));
        counts = CountVector(std::move(c));
      }
      const BinTypeCatalog catalog = enumerateBinTypes(*sizes);
      const OptResult result = optCover(counts, catalog, OptOptions{optBudget});
      Json j;
      j["profit"] = result.profit;
      j["upperBound"] = optUpperBound(*sizes, counts);
      Json used = Json::array();
      const auto names = sizes->toStrings();
      for (const auto& [multiset, copies] : result.typeCounts) {
        Json m = Json::array();
        for (SizeIndex i : multiset) m.push_back(names[i]);
        used.push_back({{"multiset", std::move(m)}, {"copies", copies}});
      }
      j["typeCounts"] = std::move(used);
      j["states"] = result.states;
      if (optCovering) j["covering"] = coveringToJson(optSolutionNonWasteful(counts, catalog));
      emit(optOut, dump(j));
      return 0;
    }

    if (run->parsed()) {
      const AlgSpec spec = runCommon.spec();
      const std::uint64_t seed = resolveSeed(runSeedFlag, runSeed);
      const OptMode mode = runOptMode == "exact"      ? OptMode::kExact
                           : runOptMode == "analytic" ? OptMode::kAnalytic
                           : runOptMode == "provided" ? OptMode::kProvided
                                                      : OptMode::kAuto;
      if (!runInstance.empty()) {
        const InstanceFile file = readInstance(runInstance);
        std::optional<FrequencyVector> prediction;
        bool perfect = false;
        if (runPred.empty() || runPred == "generator") {
          prediction = file.prediction;
        } else if (runPred == "perfect" || runPred == "perturbed") {
          if (!file.sigma.empty()) prediction = frequencies(file.sigma);
          perfect = runPred == "perfect";
          if (prediction && runPred == "perturbed") {
            prediction = perturbPrediction(*prediction, parseRational(runEta), seed);
          }
        } else {
          prediction = FrequencyVector(parseList(runPred));
          perfect = !file.sigma.empty() && *prediction == frequencies(file.sigma);
        }
        if (!prediction && (spec.name == "pc" || spec.name == "hybrid")) {
          throw InvalidArgument(spec.name + " needs --pred or a prediction in the instance file");
        }
        auto catalog = std::make_shared<const BinTypeCatalog>(enumerateBinTypes(file.sigma.sizes()));
        const RunRecord record = runAlgorithm(spec, file.sigma, prediction, catalog);
        const auto optValue = resolveOpt(file.sigma, file.knownOpt, mode);
        Json j = runRecordToJson(record, optValue, seed);
        if (runCovering) j["covering"] = coveringToJson(record.covering);
        emit(runOut, dump(j));
        if (runCheck && optValue) {
          const auto g = guaranteeFor(spec, *catalog, perfect);
          if (g && !g->holds(record.profit, *optValue)) return kCheckFailed;
        }
        return 0;
      }

      ExperimentConfig cfg;
      cfg.alg = spec;
      cfg.gen = runGen.spec();
      cfg.trials = runTrials;
      cfg.seed = seed;
      cfg.optMode = mode;
      cfg.workers = runWorkers;
      bool perfect = false;
      if (runPred.empty() || runPred == "perfect") {
        cfg.predictionMode = PredictionMode::kPerfect;
        perfect = true;
      } else if (runPred == "generator") {
        cfg.predictionMode = PredictionMode::kGenerator;
      } else if (runPred == "perturbed") {
        cfg.predictionMode = PredictionMode::kPerturbed;
        cfg.eta = parseRational(runEta);
        perfect = cfg.eta == 0;
      } else {
        cfg.predictionMode = PredictionMode::kExplicit;
        cfg.prediction = parseList(runPred);
      }
      const RatioReport report = runExperiment(cfg);
      if (isCsv(runOut)) {
        std::ostringstream csv;
        writeReportCsv(csv, report);
        emit(runOut, csv.str());
      } else {
        emit(runOut, dump(reportToJson(report)));
      }
      if (runCheck) {
        const GeneratedInstance probe = generate(
            GeneratorSpec{cfg.gen.family, cfg.gen.k, 0, cfg.gen.i, cfg.gen.sizes, cfg.gen.distribution}, 0);
        const auto g = guaranteeFor(spec, enumerateBinTypes(probe.sigma.sizes()), perfect);
        for (const TrialRow& r : report.rows) {
          if (g && r.error.empty() && r.opt && !g->holds(r.profit, *r.opt)) return kCheckFailed;
        }
      }
      return 0;
    }

    if (sweep->parsed()) {
      const std::uint64_t seed = resolveSeed(sweepSeedFlag, sweepSeed);
      std::vector<TrustLevel> lambdas;
      std::stringstream in(sweepLambdas);
      for (std::string part; std::getline(in, part, ',');) lambdas.push_back(TrustLevel::parse(part));
      std::vector<SweepCase> cases;
      if (sweepFamily == "tradeoff") {
        TradeoffPair pair = genTradeoffPair(sweepK, sweepN);
        cases.push_back(SweepCase{"tradeoff1", std::make_shared<const Instance>(pair.first.sigma),
                                  pair.prediction, true, *pair.first.knownOpt});
        cases.push_back(SweepCase{"tradeoff2", std::make_shared<const Instance>(pair.second.sigma),
                                  pair.prediction, false, *pair.second.knownOpt});
      } else {
        const SizeSet sizes = parseSizeSet(sweepSizes);
        const Distribution d = sweepDist.empty() ? Distribution::uniform(sizes)
                                                 : Distribution(sizes, parseList(sweepDist));
        auto sigma = std::make_shared<const Instance>(sampleStochastic(d, sweepN, seed));
        const auto optValue = resolveOpt(*sigma, std::nullopt);
        if (!optValue) throw InvalidArgument("no optimum available for this size set at this n");
        const FrequencyVector truth = sigma->empty() ? d.asFrequencies() : frequencies(*sigma);
        cases.push_back(SweepCase{"perfect", sigma, truth, true, *optValue});
        for (auto& [label, f] : adversarialPredictions(sizes, truth, seed)) {
          cases.push_back(SweepCase{label, sigma, f, false, *optValue});
        }
      }
      const SweepReport report = sweepLambda(lambdas, parseRational(sweepEps), cases, sweepWorkers);
      if (isCsv(sweepOut)) {
        std::ostringstream csv;
        writeSweepCsv(csv, report);
        emit(sweepOut, csv.str());
      } else {
        emit(sweepOut, dump(sweepToJson(report)));
      }
      return sweepCheck && !report.allOk() ? kCheckFailed : 0;
    }

    if (ear->parsed()) {
      const SizeSet sizes = parseSizeSet(earSizes);
      const Distribution d =
          earDist.empty() ? Distribution::uniform(sizes) : Distribution(sizes, parseList(earDist));
      const AlgSpec spec = earCommon.spec();
      const EarEstimate est =
          expectedRatioMC(spec, d, earN, earTrials, resolveSeed(earSeedFlag, earSeed), earWorkers);
      if (isCsv(earOut)) {
        RatioReport report;
        report.alg = spec.name;
        report.family = "stochastic";
        report.k = static_cast<int>(sizes.k());
        if (spec.name != "dnf") report.epsilon = spec.epsilon;
        if (spec.name == "hybrid") report.lambda = spec.lambda;
        if (spec.name == "popc") report.delta = spec.delta;
        report.rows = est.rows;
        std::ostringstream csv;
        writeReportCsv(csv, report);
        emit(earOut, csv.str());
      } else {
        emit(earOut, dump(earToJson(est, spec.name)));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "bincov: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
