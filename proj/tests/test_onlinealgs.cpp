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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bincov/generators.hpp"
#include "bincov/onlinealgs.hpp"
#include "bincov/optcover.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace bincov;

namespace {

Instance repeat(const SizeSet& s, SizeIndex i, std::size_t n) {
  return Instance(s, std::vector<SizeIndex>(n, i));
}

std::vector<std::vector<Rational>> layoutSizes(const Covering& layout) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t b = 0; b < layout.binCount(); ++b) {
    out.emplace_back();
    for (const Slot& s : layout.bin(b).slots()) out.back().push_back(layout.sizes()[s.size].value());
  }
  return out;
}

FrequencyVector randomPrediction(Rng& rng, const SizeSet& s) {
  return randomDistribution(s, rng, 12).asFrequencies();
}

}  // namespace

TEST_CASE("dual next fit") {
  const SizeSet half = parseSizeSet("1/2");
  CHECK(dnfRun(repeat(half, 0, 4)).profit == 2);
  const SizeSet thirds = parseSizeSet("1/3,2/3");
  const RunRecord r = dnfRun(Instance(thirds, {1, 1, 0}));
  CHECK(r.profit == 1);
  CHECK(r.covering.binCount() == 2);
  CHECK(dnfRun(Instance(thirds, {})).profit == 0);
  CHECK(dnfRun(Instance(thirds, {})).covering.binCount() == 0);

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const SizeSet s = testutil::randomSizeSet(rng, 4, 9);
    const Instance sigma = testutil::randomInstance(rng, s, rng.below(60));
    const RunRecord run = dnfRun(sigma);
    CHECK(oracle::sameBins(oracle::binsOf(run.covering), oracle::refDnf(oracle::itemValues(sigma))));
    CHECK(conserves(run.covering, sigma));
    CHECK(nonWasteful(run.covering));
    if (sigma.size() <= 12) {
      const std::int64_t opt = oracle::bruteOpt(oracle::itemValues(sigma));
      CHECK(2 * run.profit >= opt - 1);
    }
  }
}

TEST_CASE("group covering worked example") {
  const SizeSet s = parseSizeSet("1/2,1");
  const FrequencyVector f({Rational(1), Rational(0)});
  const GroupCoveringParams p = groupCoveringParams(enumerateBinTypes(s), f, Rational(1, 2));
  CHECK(p.mEps == 48);
  CHECK(p.mKEps == 50);
  CHECK(p.sigmaSub == CountVector({50, 0}));
  CHECK(p.layout.binCount() == 25);
  CHECK(p.layout.profit() == 25);  // an optimal covering of 50 halves

  const RunRecord r = pcRun(repeat(s, 0, 1000), f, Rational(1, 2));
  CHECK(r.profit == 500);
  CHECK(numCompletedGroups(r) == 20);
  CHECK(r.extraBins == 0);

  const RunRecord empty = pcRun(Instance(s, {}), f, Rational(1, 2));
  CHECK(empty.profit == 0);
  CHECK(numCompletedGroups(empty) == 0);
}

TEST_CASE("group covering waits for sizes that never come") {
  const SizeSet s = parseSizeSet("1/3,2/3");
  const FrequencyVector f({Rational(1, 2), Rational(1, 2)});
  for (std::size_t n : {1u, 10u, 500u}) CHECK(pcRun(repeat(s, 0, n), f, Rational(1, 2)).profit == 0);
}

TEST_CASE("unexpected sizes go to extra bins") {
  const SizeSet s = parseSizeSet("1/2,1");
  const FrequencyVector f({Rational(1), Rational(0)});
  const RunRecord r = pcRun(Instance(s, {1, 1, 0, 1}), f, Rational(1, 2));
  CHECK(r.extraBins == 3);
  CHECK(r.profit == 3);
  CHECK(r.covering.bin(r.covering.binCount() - 1).owner().kind == OwnerKind::kExtra);
}

TEST_CASE("group covering matches a chronological scan") {
  Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const SizeSet s = testutil::randomSizeSet(rng, 3, 5);
    const BinTypeCatalog c = enumerateBinTypes(s);
    const FrequencyVector f = randomPrediction(rng, s);
    const Rational eps = trial % 2 == 0 ? Rational(1, 2) : Rational(3, 4);
    const Instance sigma = testutil::randomInstance(rng, s, rng.below(400));
    const GroupCoveringParams p = groupCoveringParams(c, f, eps);
    std::vector<Rational> values;
    for (const Size& x : s.sizes()) values.push_back(x.value());
    std::vector<bool> expected;
    for (std::size_t i = 0; i < s.k(); ++i) expected.push_back(p.sigmaSub[i] != 0);

    const RunRecord run = pcRun(sigma, c, f, eps);
    int completed = 0;
    const auto ref = oracle::refGroupCovering(oracle::itemValues(sigma), layoutSizes(p.layout), values,
                                              expected, &completed);
    CHECK(oracle::sameBins(oracle::binsOf(run.covering), ref));
    CHECK(run.g == completed);
    CHECK(run.profit == oracle::coveredCount(ref));
    CHECK(conserves(run.covering, sigma));
    CHECK(nonWasteful(run.covering));
  }
}

TEST_CASE("completed groups under perfect predictions") {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const SizeSet s = trial % 2 == 0 ? parseSizeSet("1/2,1") : parseSizeSet("1/3,2/3");
    const Rational eps = trial % 4 < 2 ? Rational(1, 2) : Rational(1, 4);
    const Instance sigma = testutil::randomInstance(rng, s, 1 + rng.below(3000));
    const BinTypeCatalog c = enumerateBinTypes(s);
    const GroupCoveringParams p = groupCoveringParams(c, frequencies(sigma), eps);
    std::int64_t subTotal = p.sigmaSub.total();
    CHECK(subTotal >= p.mEps);
    const RunRecord r = pcRun(sigma, c, frequencies(sigma), eps);
    const auto n = static_cast<std::int64_t>(sigma.size());
    CHECK(n / p.mKEps <= r.g);
    CHECK(r.g <= n / p.mEps);
    const std::int64_t opt = *closedFormOpt(s, sigma.counts());
    const Rational bound = (1 - eps) * opt - (p.mKEps * p.mKEps + p.mKEps);
    CHECK(Rational(r.profit) >= bound);
  }
}

TEST_CASE("lambda splitting") {
  const SizeSet s = parseSizeSet("1/3,2/3");
  const Instance sigma(s, {0, 1, 0, 0, 1, 0, 1, 0});
  const Splitting split = lambdaSplit(sigma, 2);
  REQUIRE(split.parts.size() == 2);
  for (const Instance& part : split.parts) CHECK(part.counts() == CountVector({2, 1}));
  CHECK(split.excess.size() == 2);

  const Splitting one = lambdaSplit(sigma, 1);
  CHECK(one.parts.front() == sigma);
  CHECK(one.excess.empty());

  const Splitting even = lambdaSplit(Instance(s, {0, 0, 0, 0}), 2);
  for (const Instance& part : even.parts) CHECK(part.counts() == CountVector({2, 0}));
  CHECK(even.excess.empty());
  CHECK_THROWS_AS(lambdaSplit(sigma, 0), InvalidArgument);

  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const SizeSet sizes = testutil::randomSizeSet(rng, 4, 6);
    const Instance x = testutil::randomInstance(rng, sizes, rng.below(80));
    const auto ell = static_cast<std::int64_t>(1 + rng.below(7));
    const Splitting sp = lambdaSplit(x, ell);
    const CountVector counts = x.counts();
    CountVector total = sp.excess.counts();
    std::int64_t excess = 0;
    for (std::size_t i = 0; i < sizes.k(); ++i) excess += counts[i] % ell;
    for (const Instance& part : sp.parts) {
      for (std::size_t i = 0; i < sizes.k(); ++i) CHECK(part.counts()[i] == counts[i] / ell);
      total += part.counts();
    }
    CHECK(static_cast<std::int64_t>(sp.excess.size()) == excess);
    CHECK(excess <= (ell - 1) * static_cast<std::int64_t>(sizes.k()));
    CHECK(total == counts);
  }
}

TEST_CASE("trust levels") {
  CHECK(TrustLevel::parse("2/4").ell == 4);
  CHECK(TrustLevel::parse("2/4").kappa == 2);
  CHECK(TrustLevel::parse("0").toString() == "0/1");
  CHECK(TrustLevel::parse("1").toString() == "1/1");
  CHECK(TrustLevel::parse("0.25").toString() == "1/4");
  CHECK_THROWS_AS(TrustLevel::parse("3/2"), InvalidArgument);
  CHECK_THROWS_AS(TrustLevel::parse("1/0"), InvalidArgument);
}

TEST_CASE("hybrid routing") {
  const SizeSet s = parseSizeSet("1/2,1");
  const FrequencyVector f({Rational(1, 2), Rational(1, 2)});
  const RunRecord r = hybridRun(repeat(s, 0, 8), f, Rational(1, 2), TrustLevel(1, 2));
  std::int64_t dnfCovered = 0;
  std::vector<ItemId> dnfItems;
  for (std::size_t b = 0; b < r.covering.binCount(); ++b) {
    if (r.covering.bin(b).owner().kind != OwnerKind::kDnf) continue;
    if (r.covering.bin(b).covered()) ++dnfCovered;
    for (const Slot& slot : r.covering.bin(b).slots()) dnfItems.push_back(slot.item);
  }
  CHECK(dnfCovered == 2);
  CHECK(dnfItems == std::vector<ItemId>{0, 2, 4, 6});

  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const SizeSet sizes = testutil::randomSizeSet(rng, 3, 5);
    const BinTypeCatalog c = enumerateBinTypes(sizes);
    const FrequencyVector pred = randomPrediction(rng, sizes);
    const Instance sigma = testutil::randomInstance(rng, sizes, rng.below(300));
    const auto ell = static_cast<std::int64_t>(1 + rng.below(4));
    CHECK(hybridRun(sigma, c, pred, Rational(1, 2), TrustLevel(0, ell)).covering ==
          dnfRun(sigma).covering);
    CHECK(hybridRun(sigma, c, pred, Rational(1, 2), TrustLevel(ell, ell)).covering ==
          pcRun(sigma, c, pred, Rational(1, 2)).covering);
    const RunRecord mid = hybridRun(sigma, c, pred, Rational(1, 2), TrustLevel(1, ell + 1));
    CHECK(conserves(mid.covering, sigma));
    CHECK(nonWasteful(mid.covering));
  }
}

TEST_CASE("sample thresholds") {
  CHECK(pacThreshold(2, Rational(1, 10), Rational(1, 20)) == 2952);
  CHECK(pacThreshold(8, Rational(1), Rational(9, 10)) == 32);
  CHECK(pacThreshold(400, Rational(1, 2), Rational(1, 2)) == 4 * pacThreshold(400, Rational(1), Rational(1, 2)));
  CHECK_THROWS_AS(pacThreshold(2, Rational(0), Rational(1, 2)), InvalidArgument);
  CHECK_THROWS_AS(pacThreshold(2, Rational(1), Rational(1)), InvalidArgument);
}

TEST_CASE("empirical frequencies and distances") {
  const SizeSet s = parseSizeSet("1/2,1");
  CHECK(empiricalFrequencies(Instance(s, {0, 0, 1})).entries() ==
        std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
  CHECK(empiricalFrequencies(Instance(s, {1})).entries() == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK_THROWS_AS(empiricalFrequencies(Instance(s, {})), EmptyInstance);

  const FrequencyVector a({Rational(1, 2), Rational(1, 2)});
  CHECK(l1Distance(a, FrequencyVector({Rational(1, 4), Rational(3, 4)})) == Rational(1, 2));
  CHECK(l1Distance(a, a) == 0);
  CHECK(l1Distance(FrequencyVector({Rational(1), Rational(0)}), FrequencyVector({Rational(0), Rational(1)})) == 2);
  CHECK_THROWS_AS(l1Distance(a, FrequencyVector({Rational(1)})), InvalidArgument);

  const Distribution d = Distribution::uniform(s);
  int good = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Instance x = sampleStochastic(d, 10000, trialSeed(99, static_cast<std::uint64_t>(trial)));
    if (l1Distance(empiricalFrequencies(x), d.asFrequencies()) < Rational(1, 20)) ++good;
  }
  CHECK(good >= 190);
}

TEST_CASE("popc parameters and learning phase") {
  const SizeSet s = parseSizeSet("1/2,1");
  const BinTypeCatalog c = enumerateBinTypes(s);
  const PopcParams p = popcParams(c, Rational(3, 5), Rational(1, 2));
  CHECK(p.mHalf == 80);
  CHECK(p.mKHalf == 82);
  CHECK(p.phi >= 16 * 2 * 83 * 83);
  CHECK(p.phi == 423502);

  Rng rng(4);
  const Instance shortRun = testutil::randomInstance(rng, s, 5000);
  CHECK(popcRun(shortRun, Rational(3, 5), Rational(1, 2)).covering == dnfRun(shortRun).covering);

  const Instance longRun = sampleStochastic(Distribution::uniform(s), p.phi + 20000, 17);
  const RunRecord r = popcRun(longRun, Rational(3, 5), Rational(1, 2));
  CHECK(r.learningItems == p.phi);
  CHECK(conserves(r.covering, longRun));
  CHECK(nonWasteful(r.covering));
  // The learning prefix is placed exactly as Dual-Next-Fit would place it.
  const Instance prefix(s, std::vector<SizeIndex>(longRun.items().begin(),
                                                  longRun.items().begin() + p.phi));
  const RunRecord learn = dnfRun(prefix);
  for (std::size_t b = 0; b < learn.covering.binCount(); ++b) {
    const auto x = learn.covering.bin(b).slots();
    const auto y = r.covering.bin(b).slots();
    REQUIRE(std::equal(x.begin(), x.end(), y.begin(), y.end()));
  }
  CHECK(r.covering.bin(learn.covering.binCount()).owner().kind == OwnerKind::kGroup);
  CHECK(popcRun(longRun, Rational(3, 5), Rational(1, 2)).covering == r.covering);
}
