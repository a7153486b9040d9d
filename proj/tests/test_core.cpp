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

#include "bincov/core.hpp"

using namespace bincov;

TEST_CASE("rational parsing and rendering") {
  CHECK(parseRational("2/4") == Rational(1, 2));
  CHECK(parseRational("0.6") == Rational(3, 5));
  CHECK(parseRational("-1.25") == Rational(-5, 4));
  CHECK(parseRational("7") == Rational(7));
  CHECK_THROWS_AS(parseRational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parseRational("abc"), InvalidArgument);
  CHECK(formatRational(Rational(6, 4)) == "3/2");
  CHECK(formatRational(Rational(3)) == "3");
  CHECK(toDecimal(Rational(2, 3), 4) == "0.6667");
  CHECK(toDecimal(Rational(1, 8), 2) == "0.13");
  CHECK(toDecimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(toDecimal(Rational(1), 3) == "1.000");
  CHECK(floorOf(Rational(-3, 2)) == -2);
  CHECK(ceilOf(Rational(3, 2)) == 2);
}

TEST_CASE("size sets") {
  const SizeSet s = parseSizeSet("1/3,2/3");
  CHECK(s.k() == 2);
  CHECK(s.unit() == 3);
  CHECK(s.units(0) == 1);
  CHECK(s.units(1) == 2);
  CHECK(s.indexOf(Rational(2, 3)) == SizeIndex{1});
  CHECK_FALSE(s.indexOf(Rational(1, 2)).has_value());
  CHECK_THROWS_AS(parseSizeSet("2/3,1/3"), InvalidArgument);
  CHECK_THROWS_AS(parseSizeSet("0,1"), InvalidArgument);
  CHECK_THROWS_AS(parseSizeSet("1/2,3/2"), InvalidArgument);
  CHECK_THROWS_AS(parseSizeSet("1/2,1/2"), InvalidArgument);

  CHECK(makeFk(3).toStrings() == std::vector<std::string>{"1/3", "2/3", "1"});
  CHECK(makeFk(1).toStrings() == std::vector<std::string>{"1"});
  CHECK(makeFk(5).k() == 5);
  CHECK(makeFk(6).unit() == 6);
  CHECK_THROWS_AS(makeFk(0), InvalidArgument);
}

TEST_CASE("frequency vectors") {
  const SizeSet s = parseSizeSet("1/2,1");
  const Instance sigma(s, {0, 0, 1});
  CHECK(frequencies(sigma).entries() == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
  CHECK_THROWS_AS(frequencies(Instance(s, {})), EmptyInstance);
  CHECK_THROWS_AS(FrequencyVector({Rational(1, 2), Rational(1, 3)}), InvalidArgument);
  CHECK_THROWS_AS(FrequencyVector({Rational(3, 2), Rational(-1, 2)}), InvalidArgument);
  CHECK(FrequencyVector::normalized({Rational(1), Rational(3)})[1] == Rational(3, 4));

  const SizeSet thirds = parseSizeSet("1/3,2/3");
  CHECK(frequencies(Instance(thirds, {0, 0, 0, 0})).entries() ==
        std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("coverings track levels and profit") {
  const SizeSet s = parseSizeSet("1/3,1/2,2/3");
  Covering c(s);
  CHECK(c.profit() == 0);
  CHECK(profit(c) == 0);

  c.openBin(Owner{OwnerKind::kAlg});
  c.addItem(0, 2);
  c.openBin(Owner{OwnerKind::kAlg});
  c.addItem(1, 2);
  c.addItem(2, 0);
  CHECK(c.profit() == 1);
  CHECK(profit(c) == 1);
  CHECK(c.bin(1).level() == 1);
  CHECK_FALSE(c.bin(0).covered());

  Covering halves(s);
  halves.openBin(Owner{});
  halves.addItem(0, 1);
  halves.addItem(1, 1);
  CHECK(halves.profit() == 1);
}

TEST_CASE("placeholders do not count until filled") {
  const SizeSet s = parseSizeSet("1/2,1");
  Covering c(s);
  c.openBin(Owner{OwnerKind::kGroup, 1, 0});
  const std::size_t a = c.addPlaceholder(0);
  const std::size_t b = c.addPlaceholder(0);
  CHECK(c.bin(0).levelUnits() == 0);
  c.fillPlaceholder(0, b, 5);
  CHECK_FALSE(c.lastCovered());
  c.fillPlaceholder(0, a, 7);
  CHECK(c.profit() == 1);
  CHECK_THROWS_AS(c.fillPlaceholder(0, a, 9), InvalidArgument);
  CHECK(c.bin(0).slots()[0].item == 7);
}

TEST_CASE("conservation and non-wastefulness checks") {
  const SizeSet s = parseSizeSet("1/2,1");
  const Instance sigma(s, {0, 1, 0});

  Covering good(s);
  good.openBin(Owner{});
  good.addItem(0, 0);
  good.addItem(2, 0);
  good.openBin(Owner{});
  good.addItem(1, 1);
  CHECK(conserves(good, sigma));
  CHECK(nonWasteful(good));

  Covering wasteful(s);
  wasteful.openBin(Owner{});
  wasteful.addItem(1, 1);
  wasteful.addItem(2, 0);
  wasteful.openBin(Owner{});
  wasteful.addItem(0, 0);
  CHECK(conserves(wasteful, sigma));
  CHECK_FALSE(nonWasteful(wasteful));

  Covering missing(s);
  missing.openBin(Owner{});
  missing.addItem(0, 0);
  CHECK_FALSE(conserves(missing, sigma));

  Covering wrongSize(s);
  wrongSize.openBin(Owner{});
  wrongSize.addItem(0, 1);
  wrongSize.addItem(1, 1);
  wrongSize.addItem(2, 0);
  CHECK_FALSE(conserves(wrongSize, sigma));
}

TEST_CASE("append keeps bins and profit") {
  const SizeSet s = parseSizeSet("1/2,1");
  Covering a(s);
  a.openBin(Owner{});
  a.addItem(0, 1);
  Covering b(s);
  b.openBin(Owner{OwnerKind::kExtra});
  b.addItem(1, 0);
  b.addItem(2, 0);
  a.append(b);
  CHECK(a.binCount() == 2);
  CHECK(a.profit() == 2);
  CHECK(a.bin(1).owner().kind == OwnerKind::kExtra);
  CHECK(a.bin(1).slots().size() == 2);
}
