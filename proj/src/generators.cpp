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

#include "bincov/generators.hpp"

#include <algorithm>
#include <numeric>

namespace bincov {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty sampling range");
  const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t x = next();
  while (x < reject) x = next();
  return x % bound;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Distribution::Distribution(SizeSet sizes, std::vector<Rational> probabilities)
    : sizes_(std::move(sizes)), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != sizes_.k()) throw InvalidArgument("distribution length differs from k");
  FrequencyVector check(probabilities_);  // validates range and sum
  BigInt den = 1;
  for (const Rational& p : probabilities_) den = boost::multiprecision::lcm(den, denominator(p));
  if (den > (BigInt(1) << 62)) throw InvalidArgument("distribution denominators are too large");
  denominator_ = den.convert_to<std::uint64_t>();
  std::uint64_t acc = 0;
  for (const Rational& p : probabilities_) {
    acc += Rational(p * denominator_).convert_to<std::uint64_t>();
    cumulative_.push_back(acc);
  }
}

Distribution Distribution::uniform(SizeSet sizes) {
  const auto k = static_cast<std::int64_t>(sizes.k());
  std::vector<Rational> p(sizes.k(), Rational(1, k));
  return Distribution(std::move(sizes), std::move(p));
}

SizeIndex Distribution::draw(Rng& rng) const {
  const std::uint64_t u = rng.below(denominator_);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<SizeIndex>(it - cumulative_.begin());
}

Distribution randomDistribution(const SizeSet& sizes, Rng& rng, std::uint64_t grid) {
  if (grid == 0) throw InvalidArgument("grid must be positive");
  // k-1 sorted cut points on {0..grid} give a uniform composition.
  std::vector<std::uint64_t> cuts;
  for (std::size_t i = 0; i + 1 < sizes.k(); ++i) cuts.push_back(rng.below(grid + 1));
  cuts.push_back(0);
  cuts.push_back(grid);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> p;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    p.emplace_back(static_cast<std::int64_t>(cuts[i + 1] - cuts[i]), static_cast<std::int64_t>(grid));
  }
  return Distribution(sizes, std::move(p));
}

namespace {

SizeIndex requireSize(const SizeSet& sizes, const Rational& value) {
  const auto idx = sizes.indexOf(value);
  if (!idx) throw InvalidArgument("size " + formatRational(value) + " is not in the size set");
  return *idx;
}

void requireK(int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
}

void requireN(std::int64_t n) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
}

FrequencyVector halfHalf(const SizeSet& sizes, SizeIndex a, SizeIndex b) {
  std::vector<Rational> f(sizes.k(), Rational(0));
  f[a] += Rational(1, 2);
  f[b] += Rational(1, 2);
  return FrequencyVector(std::move(f));
}

}  // namespace

SizeSet tradeoffSizes(int k) {
  requireK(k);
  if (k == 2) return SizeSet({Rational(1, 2)});
  return SizeSet({Rational(1, k), Rational(k - 1, k)});
}

TradeoffPair genTradeoffPair(const SizeSet& sizes, int k, std::int64_t n) {
  requireK(k);
  requireN(n);
  const SizeIndex small = requireSize(sizes, Rational(1, k));
  const SizeIndex large = requireSize(sizes, Rational(k - 1, k));
  std::vector<SizeIndex> second(static_cast<std::size_t>(n), large);
  std::vector<SizeIndex> first = second;
  first.insert(first.end(), static_cast<std::size_t>(n), small);
  FrequencyVector f = halfHalf(sizes, small, large);
  return TradeoffPair{
      GeneratedInstance{Family::kTradeoff1, Instance(sizes, std::move(first)), f, n},
      GeneratedInstance{Family::kTradeoff2, Instance(sizes, std::move(second)), f, n / 2}, f};
}

TradeoffPair genTradeoffPair(int k, std::int64_t n) { return genTradeoffPair(tradeoffSizes(k), k, n); }

GeneratedInstance genImpossibility(int k, std::int64_t n, int i) {
  requireK(k);
  requireN(n);
  if (i < 1 || i > k - 1) throw InvalidArgument("impossibility family requires 1 <= i <= k-1");
  const SizeSet sizes = makeFk(k);
  std::vector<SizeIndex> items(static_cast<std::size_t>(n), requireSize(sizes, Rational(1, k)));
  items.insert(items.end(), static_cast<std::size_t>(n / i), requireSize(sizes, Rational(k - i, k)));
  return GeneratedInstance{Family::kImpossibility, Instance(sizes, std::move(items)), std::nullopt,
                           n / i};
}

GeneratedInstance genAntiRobust(const SizeSet& sizes, int k, std::int64_t n) {
  requireK(k);
  requireN(n);
  const SizeIndex small = requireSize(sizes, Rational(1, k));
  const SizeIndex large = requireSize(sizes, Rational(k - 1, k));
  std::vector<SizeIndex> items(static_cast<std::size_t>(n), small);
  return GeneratedInstance{Family::kAntiRobust, Instance(sizes, std::move(items)),
                           halfHalf(sizes, small, large), n / k};
}

GeneratedInstance genAntiRobust(int k, std::int64_t n) { return genAntiRobust(tradeoffSizes(k), k, n); }

Instance sampleStochastic(const Distribution& d, std::int64_t n, std::uint64_t seed) {
  requireN(n);
  Rng rng(seed);
  std::vector<SizeIndex> items(static_cast<std::size_t>(n));
  for (SizeIndex& item : items) item = d.draw(rng);
  return Instance(d.sizes(), std::move(items));
}

FrequencyVector perturbPrediction(const FrequencyVector& f, const Rational& eta, std::uint64_t seed) {
  if (eta < 0 || eta > 2) throw InvalidArgument("eta must lie in [0, 2]");
  std::vector<Rational> out = f.entries();
  if (eta == 0) return FrequencyVector(std::move(out));

  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out[a] > out[b]; });

  Rational left = eta / 2;
  std::size_t lo = 0;
  std::size_t hi = order.size() - 1;
  while (left > 0 && lo < hi) {
    Rational& donor = out[order[lo]];
    Rational& receiver = out[order[hi]];
    const Rational amount = std::min({left, donor, Rational(1) - receiver});
    donor -= amount;
    receiver += amount;
    left -= amount;
    if (donor == 0) ++lo;
    if (receiver == 1) --hi;
  }
  if (left > 0) {
    throw InvalidArgument("cannot move " + formatRational(eta / 2) + " of mass within this vector");
  }
  return FrequencyVector(std::move(out));
}

}  // namespace bincov
