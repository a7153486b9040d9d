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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <iomanip>
#include <vector>

#include <unistd.h>

#include "bincov/bintypes.hpp"
#include "bincov/generators.hpp"
#include "bincov/harness.hpp"
#include "bincov/onlinealgs.hpp"
#include "bincov/optcover.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace bincov;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string detail) { return Outcome{false, std::move(detail)}; }

std::string dec(const Rational& r) { return toDecimal(r, 4); }

// 1
Outcome typeCounts() {
  std::ostringstream detail;
  bool pass = true;
  for (int k = 2; k <= 8; ++k) {
    const BinTypeCatalog c = enumerateBinTypes(tradeoffSizes(k));
    const bool ok = c.tauS() == static_cast<std::size_t>(2 * k + 2) && c.tauSmax() == static_cast<std::size_t>(k);
    if (!ok) {
      pass = false;
      detail << "k=" << k << " (|S|=" << c.sizes().k() << "): tau=" << c.tauS() << " tauMax=" << c.tauSmax()
             << ", expected " << 2 * k + 2 << " and " << k << "; ";
    }
  }
  if (pass) detail << "k=2..8 exact";
  return Outcome{pass, detail.str()};
}

// 2
Outcome optVersusBruteForce() {
  Rng rng(0xC0FFEE);
  for (int trial = 0; trial < 500; ++trial) {
    const SizeSet s = testutil::randomSizeSet(rng, 3, 10);
    const Instance sigma = testutil::randomInstance(rng, s, rng.below(13));
    const std::int64_t got = optCover(sigma.counts(), enumerateBinTypes(s)).profit;
    const int want = oracle::bruteOpt(oracle::itemValues(sigma));
    if (got != want) {
      return fail("trial " + std::to_string(trial) + ": search " + std::to_string(got) + ", brute force " +
                  std::to_string(want));
    }
  }
  return Outcome{true, "500 instances agree"};
}

// 3
Outcome analyticVersusSearch() {
  int checked = 0;
  for (int k = 2; k <= 5; ++k) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      const TradeoffPair pair = genTradeoffPair(k, n);
      const BinTypeCatalog c = enumerateBinTypes(pair.first.sigma.sizes());
      const std::int64_t o1 = optCover(pair.first.sigma.counts(), c).profit;
      const std::int64_t o2 = optCover(pair.second.sigma.counts(), c).profit;
      const std::int64_t oa = optCover(genAntiRobust(k, n).sigma.counts(), c).profit;
      if (o1 != analyticOpt(Family::kTradeoff1, k, n) || o1 != n) return fail("tradeoff1 k=" + std::to_string(k));
      if (o2 != analyticOpt(Family::kTradeoff2, k, n) || o2 != n / 2) return fail("tradeoff2 k=" + std::to_string(k));
      if (oa != analyticOpt(Family::kAntiRobust, k, n) || oa != n / k) return fail("anti-robust k=" + std::to_string(k));
      checked += 3;
      for (int i = 1; i <= k - 1; ++i) {
        const GeneratedInstance g = genImpossibility(k, n, i);
        const std::int64_t oi = optCover(g.sigma.counts(), enumerateBinTypes(g.sigma.sizes())).profit;
        if (oi != analyticOpt(Family::kImpossibility, k, n, i) || oi != n / i) {
          return fail("impossibility k=" + std::to_string(k) + " i=" + std::to_string(i));
        }
        ++checked;
      }
    }
  }
  return Outcome{true, std::to_string(checked) + " family instances agree"};
}

// 4
Outcome dnfGuarantee() {
  Rng rng(404);
  const std::vector<SizeSet> closed = {parseSizeSet("1"), parseSizeSet("1/2,1"), parseSizeSet("1/3,2/3")};
  int count = 0;
  auto check = [&](const Instance& sigma, std::int64_t opt) {
    ++count;
    return 2 * dnfRun(sigma).profit >= opt - 1;
  };
  for (int t = 0; t < 400; ++t) {
    const SizeSet s = testutil::randomSizeSet(rng, 4, 10);
    const Instance sigma = testutil::randomInstance(rng, s, rng.below(13));
    if (!check(sigma, oracle::bruteOpt(oracle::itemValues(sigma)))) return fail("small random trial " + std::to_string(t));
  }
  for (int t = 0; t < 300; ++t) {
    const SizeSet& s = closed[static_cast<std::size_t>(t) % closed.size()];
    const Distribution d = randomDistribution(s, rng);
    const Instance sigma = sampleStochastic(d, static_cast<std::int64_t>(1 + rng.below(100000)), rng.next());
    if (!check(sigma, *closedFormOpt(s, sigma.counts()))) return fail("large random trial " + std::to_string(t));
  }
  for (int t = 0; t < 300; ++t) {
    const int k = static_cast<int>(2 + rng.below(7));
    const auto n = static_cast<std::int64_t>(rng.below(100001));
    GeneratedInstance g = [&] {
      switch (t % 4) {
        case 0: return genTradeoffPair(k, n).first;
        case 1: return genTradeoffPair(k, n).second;
        case 2: return genImpossibility(k, n, static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(k - 1))));
        default: return genAntiRobust(k, n);
      }
    }();
    if (!check(g.sigma, *g.knownOpt)) return fail("generator trial " + std::to_string(t));
  }
  return Outcome{true, std::to_string(count) + " instances satisfy 2 profit >= opt - 1"};
}

struct PoolCase {
  SizeSet sizes;
  Rational eps;
  Instance sigma;
};

std::vector<PoolCase> perfectPool() {
  Rng rng(5150);
  const std::vector<SizeSet> sets = {parseSizeSet("1/2,1"), parseSizeSet("1/3,2/3")};
  const std::vector<Rational> epss = {Rational(1, 2), Rational(1, 4)};
  std::vector<PoolCase> pool;
  for (int t = 0; t < 200; ++t) {
    const SizeSet& s = sets[static_cast<std::size_t>(t) % 2];
    const Rational& eps = epss[static_cast<std::size_t>(t / 2) % 2];
    const BinTypeCatalog c = enumerateBinTypes(s);
    const GroupCoveringParams p = groupCoveringParams(c, FrequencyVector::normalized({1, 1}), eps);
    const std::int64_t floorN = 10 * (p.mKEps * p.mKEps + p.mKEps);
    const auto n = floorN + static_cast<std::int64_t>(rng.below(50000));
    pool.push_back(PoolCase{s, eps, sampleStochastic(randomDistribution(s, rng), n, rng.next())});
  }
  return pool;
}

// 5
Outcome completedGroups(const std::vector<PoolCase>& pool) {
  for (std::size_t t = 0; t < pool.size(); ++t) {
    const PoolCase& pc = pool[t];
    const BinTypeCatalog c = enumerateBinTypes(pc.sizes);
    const FrequencyVector f = frequencies(pc.sigma);
    const GroupCoveringParams p = groupCoveringParams(c, f, pc.eps);
    const RunRecord r = pcRun(pc.sigma, c, f, pc.eps);
    const auto n = static_cast<std::int64_t>(pc.sigma.size());
    if (r.g < n / p.mKEps || r.g > n / p.mEps) {
      return fail("trial " + std::to_string(t) + ": g=" + std::to_string(r.g) + " outside [" +
                  std::to_string(n / p.mKEps) + ", " + std::to_string(n / p.mEps) + "]");
    }
  }
  return Outcome{true, std::to_string(pool.size()) + " runs within bounds"};
}

// 6
Outcome pcConsistency(const std::vector<PoolCase>& pool) {
  for (std::size_t t = 0; t < pool.size(); ++t) {
    const PoolCase& pc = pool[t];
    const BinTypeCatalog c = enumerateBinTypes(pc.sizes);
    const FrequencyVector f = frequencies(pc.sigma);
    const GroupCoveringParams p = groupCoveringParams(c, f, pc.eps);
    const RunRecord r = pcRun(pc.sigma, c, f, pc.eps);
    const std::int64_t opt = *closedFormOpt(pc.sizes, pc.sigma.counts());
    if (Rational(r.profit) < (1 - pc.eps) * opt - (p.mKEps * p.mKEps + p.mKEps)) {
      return fail("trial " + std::to_string(t) + ": profit " + std::to_string(r.profit) + ", opt " + std::to_string(opt));
    }
  }
  ExperimentConfig cfg;
  cfg.alg.name = "pc";
  cfg.alg.epsilon = Rational(1, 2);
  cfg.gen.family = Family::kStochastic;
  cfg.gen.sizes = parseSizeSet("1/2,1");
  cfg.gen.n = 100000;
  cfg.trials = 20;
  cfg.seed = 606;
  const RatioReport report = runExperiment(cfg);
  for (const TrialRow& row : report.rows) {
    if (!row.error.empty() || !row.ratio || *row.ratio <= Rational(1, 2)) {
      return fail("n=100000 trial " + std::to_string(row.trial) + " ratio " + (row.ratio ? dec(*row.ratio) : row.error));
    }
  }
  return Outcome{true, "pool inequalities hold; min ratio at n=100000 is " + dec(*report.minRatio())};
}

// 7
Outcome antiRobustWitness() {
  const GeneratedInstance g = genAntiRobust(3, 9000);
  const RunRecord r = pcRun(g.sigma, *g.prediction, Rational(1, 2));
  const std::int64_t opt = optCover(g.sigma.counts(), enumerateBinTypes(g.sigma.sizes())).profit;
  if (r.profit != 0 || opt != 3000 || *g.knownOpt != 3000) {
    return fail("profit " + std::to_string(r.profit) + ", opt " + std::to_string(opt));
  }
  return Outcome{true, "profit 0, opt 3000"};
}

// 8
Outcome splitting() {
  Rng rng(808);
  for (int t = 0; t < 500; ++t) {
    const SizeSet s = testutil::randomSizeSet(rng, 5, 10);
    const Instance sigma = testutil::randomInstance(rng, s, rng.below(200));
    const auto ell = static_cast<std::int64_t>(1 + rng.below(7));
    const Splitting sp = lambdaSplit(sigma, ell);
    const CountVector counts = sigma.counts();
    std::int64_t expectedExcess = 0;
    for (std::size_t i = 0; i < s.k(); ++i) expectedExcess += counts[i] % ell;
    for (const Instance& part : sp.parts) {
      for (std::size_t i = 0; i < s.k(); ++i) {
        if (part.counts()[i] != counts[i] / ell) return fail("trial " + std::to_string(t) + " part counts");
      }
    }
    if (static_cast<std::int64_t>(sp.excess.size()) != expectedExcess ||
        expectedExcess > (ell - 1) * static_cast<std::int64_t>(s.k())) {
      return fail("trial " + std::to_string(t) + " excess size");
    }
  }
  return Outcome{true, "500 splittings exact"};
}

// 9
Outcome hybridEndpoints() {
  Rng rng(909);
  for (int t = 0; t < 100; ++t) {
    const SizeSet s = testutil::randomSizeSet(rng, 3, 6);
    const BinTypeCatalog c = enumerateBinTypes(s);
    const FrequencyVector f = randomDistribution(s, rng, 20).asFrequencies();
    const Instance sigma = testutil::randomInstance(rng, s, rng.below(2000));
    const auto ell = static_cast<std::int64_t>(1 + rng.below(5));
    if (!(hybridRun(sigma, c, f, Rational(1, 2), TrustLevel(0, ell)).covering == dnfRun(sigma).covering)) {
      return fail("trial " + std::to_string(t) + ": trust 0 differs from dual next fit");
    }
    if (!(hybridRun(sigma, c, f, Rational(1, 2), TrustLevel(ell, ell)).covering ==
          pcRun(sigma, c, f, Rational(1, 2)).covering)) {
      return fail("trial " + std::to_string(t) + ": trust 1 differs from group covering");
    }
  }
  return Outcome{true, "100 instances bin-identical at both ends"};
}

std::vector<TrustLevel> sweepLevels() {
  return {TrustLevel(0, 1), TrustLevel(1, 4), TrustLevel(1, 2), TrustLevel(3, 4), TrustLevel(1, 1)};
}

// 10
Outcome sweepGuarantees() {
  const SizeSet s = parseSizeSet("1/2,1");
  auto sigma = std::make_shared<const Instance>(sampleStochastic(Distribution::uniform(s), 100000, 1010));
  const std::int64_t opt = *resolveOpt(*sigma, std::nullopt);
  const FrequencyVector truth = frequencies(*sigma);
  std::vector<SweepCase> cases{{"perfect", sigma, truth, true, opt}};
  for (auto& [label, f] : adversarialPredictions(s, truth, 1010)) cases.push_back(SweepCase{label, sigma, f, false, opt});
  const SweepReport report = sweepLambda(sweepLevels(), Rational(1, 2), cases);
  std::ostringstream detail;
  for (const SweepRow& r : report.rows) {
    detail << r.lambda.toString() << ": c=" << dec(r.consistency) << " r=" << dec(r.robustness) << "; ";
  }
  return Outcome{report.allOk(), detail.str()};
}

// 11
Outcome tradeoffObserved() {
  const int k = 10;
  const TradeoffPair pair = genTradeoffPair(k, 100000);
  std::vector<SweepCase> cases{
      {"tradeoff1", std::make_shared<const Instance>(pair.first.sigma), pair.prediction, true, *pair.first.knownOpt},
      {"tradeoff2", std::make_shared<const Instance>(pair.second.sigma), pair.prediction, false, *pair.second.knownOpt}};
  const SweepReport report = sweepLambda(sweepLevels(), Rational(1, 2), cases);
  bool pass = true;
  std::ostringstream detail;
  for (const SweepRow& r : report.rows) {
    const Rational alpha = 1 - r.consistency;
    const Rational bound = 2 * alpha + Rational(1, 50);
    const bool ok = r.robustness <= bound;
    pass = pass && ok;
    detail << r.lambda.toString() << ": 1-a=" << dec(r.consistency) << " r=" << dec(r.robustness)
           << " 2a+0.02=" << dec(bound) << (ok ? "" : " VIOLATED") << "; ";
  }
  if (!pass) {
    // Informational: the pair itself only forces r <= 2a / (1 - 2/k).
    detail << "[pair-level bound 2a/(1-2/k)+0.02:";
    for (const SweepRow& r : report.rows) {
      const Rational alpha = 1 - r.consistency;
      const Rational loose = 2 * alpha / (1 - Rational(2, k)) + Rational(1, 50);
      detail << ' ' << r.lambda.toString() << (r.robustness <= loose ? " ok" : " no");
    }
    detail << "]";
  }
  return Outcome{pass, detail.str()};
}

// 12
Outcome impossibilityFamily() {
  Rational worst = 1;
  for (int i = 1; i <= 4; ++i) {
    const GeneratedInstance g = genImpossibility(5, 100000, i);
    worst = std::min(worst, Rational(dnfRun(g.sigma).profit, *g.knownOpt));
  }
  const Rational limit = hBound(5) + Rational(1, 100);
  return Outcome{worst <= limit, "min ratio " + dec(worst) + " vs " + dec(limit)};
}

// 13
Outcome learningThreshold() {
  const SizeSet s = parseSizeSet("1/2,1");
  const Rational gamma(1, 10);
  const std::int64_t n = pacThreshold(2, gamma, Rational(1, 20));
  if (n != 2952) return fail("threshold " + std::to_string(n));
  Rng rng(1313);
  int bad = 0;
  for (int t = 0; t < 400; ++t) {
    const Distribution d = randomDistribution(s, rng);
    const Instance sigma = sampleStochastic(d, n, rng.next());
    if (l1Distance(empiricalFrequencies(sigma), d.asFrequencies()) > gamma) ++bad;
  }
  const Rational fraction(bad, 400);
  return Outcome{fraction <= Rational(3, 40), "n=2952, " + std::to_string(bad) + "/400 above gamma"};
}

// 14
Outcome popcDeskScale() {
  const SizeSet s = parseSizeSet("1/2,1");
  const Rational eps(3, 5);
  const Rational delta(1, 2);
  auto catalog = std::make_shared<const BinTypeCatalog>(enumerateBinTypes(s));
  const PopcParams p = popcParams(*catalog, eps, delta);
  const Distribution d = Distribution::uniform(s);
  int good = 0;
  Rational ratioSum = 0;
  double slowest = 0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    const auto start = std::chrono::steady_clock::now();
    const Instance sigma = sampleStochastic(d, 8000000, trialSeed(1414, static_cast<std::uint64_t>(t)));
    Popc popc(catalog, eps, delta);
    for (std::size_t i = 0; i < sigma.size(); ++i) popc.place(static_cast<ItemId>(i), sigma[i]);
    const RunRecord r = popc.finish();
    const std::int64_t opt = *closedFormOpt(s, sigma.counts());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, secs);
    if (Rational(r.profit) >= Rational(2, 5) * opt - 2 * p.phi) ++good;
    ratioSum += Rational(r.profit, opt);
  }
  const Rational mean = ratioSum / trials;
  std::ostringstream detail;
  detail << "phi=" << p.phi << ", " << good << "/" << trials << " meet the bound, mean ratio " << dec(mean)
         << ", slowest trial " << std::fixed << std::setprecision(1) << slowest << "s";
  const bool pass = Rational(good, trials) >= 1 - delta && mean >= Rational(9, 10) && slowest <= 60;
  return Outcome{pass, detail.str()};
}

// 15
Outcome cliDeterminism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("bincov_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = BINCOV_CLI_PATH;
  auto runTwice = [&](const std::string& name, const std::string& args, const std::string& ext) -> std::string {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / (name + std::to_string(rep) + ext);
      const std::string cmd = "\"" + cli + "\" " + args + " -o \"" + out.string() + "\" 2>/dev/null";
      if (std::system(cmd.c_str()) != 0) return name + ": command failed";
      std::ifstream in(out, std::ios::binary);
      outputs[rep].assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) return name + ": outputs differ";
    return "";
  };
  const fs::path inst = dir / "inst.json";
  const std::string genCmd = "\"" + cli + "\" gen --family stochastic --sizes 1/2,1 --n 5000 --seed 15 -o \"" +
                             inst.string() + "\"";
  if (std::system(genCmd.c_str()) != 0) return fail("gen failed");
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"gen", "gen --family stochastic --sizes 1/3,2/3 --dist 1/4,3/4 --n 2000 --seed 7"},
      {"gen-fam", "gen --family impossibility --k 5 --n 40 --i 2"},
      {"types", "enumerate-types --sizes 1/4,3/4"},
      {"opt", "opt --sizes 1/3,1/2,2/3 --counts 3,2,3 --covering"},
      {"run-dnf", "run --alg dnf --instance \"" + inst.string() + "\" --seed 3 --covering"},
      {"run-pc", "run --alg pc --instance \"" + inst.string() + "\" --pred perfect --eps 1/2 --seed 3"},
      {"run-hy", "run --alg hybrid --instance \"" + inst.string() + "\" --pred 1/4,3/4 --lambda 1/3 --seed 3"},
      {"run-csv", "run --alg pc --family stochastic --sizes 1/2,1 --n 20000 --trials 4 --seed 11 --out-format csv"},
      {"sweep-csv", "sweep --sizes 1/2,1 --n 20000 --seed 5 --lambdas 0,1/2,1 --out-format csv"},
      {"sweep-json", "sweep --family tradeoff --k 10 --n 20000 --lambdas 0,1/2,1"},
      {"ear", "ear --alg popc --eps 3/5 --delta 1/2 --n 500000 --trials 3 --seed 9"},
  };
  for (const auto& [name, args] : runs) {
    std::string a = args;
    const auto pos = a.find(" --out-format csv");
    if (pos != std::string::npos) a.erase(pos);
    const std::string err = runTwice(name, a, pos != std::string::npos ? ".csv" : ".json");
    if (!err.empty()) {
      fs::remove_all(dir);
      return fail(err);
    }
  }
  fs::remove_all(dir);
  return Outcome{true, std::to_string(runs.size()) + " commands byte-identical on repeat"};
}

}  // namespace

int main() {
  const std::vector<PoolCase> pool = perfectPool();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"bin-type counts for {1/k,(k-1)/k}", typeCounts},
      {"optimum search equals brute force", optVersusBruteForce},
      {"closed-form optima of the generator families", analyticVersusSearch},
      {"dual next fit half guarantee", dnfGuarantee},
      {"completed-group bounds under perfect predictions", [&] { return completedGroups(pool); }},
      {"group covering consistency", [&] { return pcConsistency(pool); }},
      {"group covering non-robustness witness", antiRobustWitness},
      {"ell-splitting counts", splitting},
      {"hybrid endpoint identities", hybridEndpoints},
      {"hybrid consistency and robustness lines", sweepGuarantees},
      {"tradeoff pair within 2a+0.02", tradeoffObserved},
      {"impossibility family ratio", impossibilityFamily},
      {"frequency learning threshold", learningThreshold},
      {"learned-prediction covering at desk scale", popcDeskScale},
      {"CLI determinism", cliDeterminism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " | "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
