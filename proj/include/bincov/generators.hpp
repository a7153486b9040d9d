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

// Instance generators: the adversarial sequence families, i.i.d. sampling
// and controlled prediction perturbation.
//
// Randomness comes from Rng ("bincov-rng-v1"): std::mt19937_64 seeded with
// the 64-bit seed, bounded integers by rejection sampling. Both steps are
// fully specified, so a seed yields the same stream on every platform.

#ifndef BINCOV_GENERATORS_HPP_
#define BINCOV_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bincov/core.hpp"
#include "bincov/family.hpp"

namespace bincov {

class Rng {
 public:
  static constexpr const char* kName = "bincov-rng-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `trial` in a run with base seed `base`.
inline std::uint64_t trialSeed(std::uint64_t base, std::uint64_t trial) {
  return splitmix64(base + trial);
}

/// A probability distribution over a size set with exact rational weights.
class Distribution {
 public:
  Distribution(SizeSet sizes, std::vector<Rational> probabilities);
  static Distribution uniform(SizeSet sizes);

  const SizeSet& sizes() const { return sizes_; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }
  FrequencyVector asFrequencies() const { return FrequencyVector(probabilities_); }

  SizeIndex draw(Rng& rng) const;

 private:
  SizeSet sizes_;
  std::vector<Rational> probabilities_;
  std::uint64_t denominator_ = 1;
  std::vector<std::uint64_t> cumulative_;  // integer thresholds over denominator_
};

/// Random distribution with probabilities on the 1/grid lattice.
Distribution randomDistribution(const SizeSet& sizes, Rng& rng, std::uint64_t grid = 1000);

struct GeneratedInstance {
  Family family;
  Instance sigma;
  std::optional<FrequencyVector> prediction;
  std::optional<std::int64_t> knownOpt;
};

struct TradeoffPair {
  GeneratedInstance first;   // n x (k-1)/k then n x 1/k
  GeneratedInstance second;  // n x (k-1)/k
  FrequencyVector prediction;
};

/// {1/k, (k-1)/k}; a single size when k = 2.
SizeSet tradeoffSizes(int k);

TradeoffPair genTradeoffPair(int k, std::int64_t n);
/// Same pair over a caller-chosen size set containing 1/k and (k-1)/k.
TradeoffPair genTradeoffPair(const SizeSet& sizes, int k, std::int64_t n);

/// n x 1/k followed by floor(n/i) x (k-i)/k over F_k.
GeneratedInstance genImpossibility(int k, std::int64_t n, int i);

/// n x 1/k with the prediction "half 1/k, half (k-1)/k".
GeneratedInstance genAntiRobust(int k, std::int64_t n);
GeneratedInstance genAntiRobust(const SizeSet& sizes, int k, std::int64_t n);

Instance sampleStochastic(const Distribution& d, std::int64_t n, std::uint64_t seed);

/// Moves eta/2 of mass from the largest entries to the smallest so that the
/// result is at L1 distance exactly eta from f. Ties are ordered by `seed`.
FrequencyVector perturbPrediction(const FrequencyVector& f, const Rational& eta, std::uint64_t seed);

}  // namespace bincov

#endif  // BINCOV_GENERATORS_HPP_
