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

#include <algorithm>
#include <set>

#include "bincov/bintypes.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace bincov;

namespace {

std::vector<Rational> valuesOf(const SizeSet& s) {
  std::vector<Rational> out;
  for (const Size& x : s.sizes()) out.push_back(x.value());
  return out;
}

}  // namespace

TEST_CASE("small catalogs") {
  const BinTypeCatalog halves = enumerateBinTypes(parseSizeSet("1/2"));
  CHECK(halves.tauS() == 2);
  CHECK(halves.tauSmax() == 2);
  CHECK(halves.types()[0].tuple == std::vector<SizeIndex>{0});
  CHECK(halves.types()[1].tuple == std::vector<SizeIndex>{0, 0});
  CHECK(halves.coveredTypes() == std::vector<std::size_t>{1});

  const BinTypeCatalog one = enumerateBinTypes(parseSizeSet("1"));
  CHECK(one.tauS() == 1);
  CHECK(one.tauSmax() == 1);

  const BinTypeCatalog thirds = enumerateBinTypes(parseSizeSet("1/3,2/3"));
  CHECK(thirds.tauS() == 8);
  CHECK(thirds.tauSmax() == 3);
}

TEST_CASE("two-size family has 2k+2 types of length at most k") {
  for (int k = 3; k <= 8; ++k) {
    const SizeSet s({Rational(1, k), Rational(k - 1, k)});
    const BinTypeCatalog c = enumerateBinTypes(s);
    CHECK(c.tauS() == static_cast<std::size_t>(2 * k + 2));
    CHECK(c.tauSmax() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("catalog matches breadth-first count on random size sets") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const SizeSet s = testutil::randomSizeSet(rng, 3, 7);
    const BinTypeCatalog c = enumerateBinTypes(s);
    const auto [count, longest] = oracle::bruteBinTypes(valuesOf(s));
    CHECK(c.tauS() == count);
    CHECK(c.tauSmax() == longest);
  }
}

TEST_CASE("catalog invariants") {
  const SizeSet s = makeFk(5);
  const BinTypeCatalog c = enumerateBinTypes(s);
  std::set<std::vector<SizeIndex>> all;
  for (const BinType& t : c.types()) all.insert(t.tuple);
  CHECK(all.size() == c.tauS());
  for (const BinType& t : c.types()) {
    // Prefix closure and the prefix rule.
    for (std::size_t j = 1; j < t.tuple.size(); ++j) {
      const std::vector<SizeIndex> prefix(t.tuple.begin(), t.tuple.begin() + static_cast<long>(j));
      CHECK(all.count(prefix) == 1);
    }
    Rational prefixSum = 0;
    for (std::size_t j = 0; j + 1 < t.tuple.size(); ++j) prefixSum += s[t.tuple[j]].value();
    CHECK(prefixSum < 1);
    CHECK(c.total(t) == prefixSum + s[t.tuple.back()].value());
    CHECK(t.covered == (c.total(t) >= 1));
    CHECK(t.tuple.size() <= 6);
  }
  std::size_t indexed = 0;
  for (const auto& [m, orderings] : c.multisetIndex()) {
    CHECK(std::is_sorted(m.begin(), m.end()));
    for (std::size_t idx : orderings) CHECK(canonicalMultiset(c.types()[idx]) == m);
    indexed += orderings.size();
  }
  CHECK(indexed == c.tauS());
}

TEST_CASE("replaying a type never adds to a covered bin") {
  const SizeSet s = parseSizeSet("1/4,1/2,3/4");
  const BinTypeCatalog c = enumerateBinTypes(s);
  for (const BinType& t : c.types()) {
    Covering cov(s);
    cov.openBin(Owner{});
    ItemId id = 0;
    for (SizeIndex i : t.tuple) cov.addItem(id++, i);
    CHECK(nonWasteful(cov));
  }
}

TEST_CASE("catalog cap") {
  const SizeSet s = makeFk(8);
  CHECK_THROWS_AS(enumerateBinTypes(s, 10), CatalogOverflow);
  try {
    enumerateBinTypes(s, 10);
  } catch (const CatalogOverflow& e) {
    CHECK(e.partialCount() == 10);
  }
}

TEST_CASE("canonical multisets") {
  const SizeSet s = parseSizeSet("1/3,2/3");
  CHECK(canonicalMultiset(BinType{{1, 0}, 3, true}) == Multiset{0, 1});
  CHECK(canonicalMultiset(BinType{{0, 1}, 3, true}) == Multiset{0, 1});
  CHECK(canonicalMultiset(BinType{{0, 0, 1}, 4, true}) == Multiset{0, 0, 1});
}

TEST_CASE("non-wasteful orderings") {
  const SizeSet s = parseSizeSet("1/10,1/2");
  CHECK(nonWastefulOrdering(s, {0, 1, 1}).tuple == std::vector<SizeIndex>{1, 0, 1});
  CHECK(nonWastefulOrdering(parseSizeSet("1"), {0}).tuple == std::vector<SizeIndex>{0});
  CHECK_THROWS_AS(nonWastefulOrdering(parseSizeSet("1/2"), {0, 0, 0, 0}), NoOrdering);

  // Whenever some ordering is valid, the rule finds one.
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SizeSet sizes = testutil::randomSizeSet(rng, 3, 6);
    Multiset m(1 + rng.below(5));
    for (auto& x : m) x = static_cast<SizeIndex>(rng.below(sizes.k()));
    std::sort(m.begin(), m.end());
    bool exists = false;
    Multiset perm = m;
    do {
      Rational prefix = 0;
      for (std::size_t j = 0; j + 1 < perm.size(); ++j) prefix += sizes[perm[j]].value();
      exists = exists || prefix < 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (exists) {
      const BinType t = nonWastefulOrdering(sizes, m);
      CHECK(canonicalMultiset(t) == m);
      Rational prefix = 0;
      for (std::size_t j = 0; j + 1 < t.tuple.size(); ++j) prefix += sizes[t.tuple[j]].value();
      CHECK(prefix < 1);
    } else {
      CHECK_THROWS_AS(nonWastefulOrdering(sizes, m), NoOrdering);
    }
  }
}
