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

// Exact offline optimum for bin covering over a count vector.

#ifndef BINCOV_OPTCOVER_HPP_
#define BINCOV_OPTCOVER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bincov/bintypes.hpp"
#include "bincov/core.hpp"
#include "bincov/family.hpp"

namespace bincov {

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

struct OptOptions {
  std::size_t nodeBudget = kDefaultNodeBudget;
};

struct OptResult {
  std::int64_t profit = 0;
  /// Covered multisets used, in canonical order, with multiplicities.
  std::vector<std::pair<Multiset, std::int64_t>> typeCounts;
  CountVector leftovers;
  std::size_t states = 0;  // memo entries created by the search
};

/// Maximum number of covered bins over the items in `counts`.
///
/// The search only packs covered multisets that are minimal (dropping any
/// item uncovers them); every optimum can be reduced to such bins without
/// losing profit. It is a memoized depth-first search over residual count
/// vectors that picks multiplicities type by type in canonical order
/// (non-increasing), warm-started by greedy packings and pruned with
///   profit_so_far + min(floor(sum of residual sizes),
///                       floor(residual items / fewest items per bin)).
/// Throws BudgetExceeded past `options.nodeBudget` memo states.
OptResult optCover(const CountVector& counts, const BinTypeCatalog& catalog, OptOptions options = {});

/// A covering realizing optCover's profit. Covered bins are laid out with
/// nonWastefulOrdering; leftover items are packed dual-next-fit style into
/// trailing bins. Item ids number the slots in layout order.
Covering optSolutionNonWasteful(const CountVector& counts, const BinTypeCatalog& catalog,
                                OptOptions options = {});

/// floor(sum_i counts_i * s_i).
std::int64_t optUpperBound(const SizeSet& sizes, const CountVector& counts);

/// Closed-form optimum for the generator families:
///   tradeoff1 -> n, tradeoff2 -> floor(n/2), impossibility -> floor(n/i),
///   anti-robust -> floor(n/k).
/// Throws InvalidArgument for the stochastic family or invalid parameters.
std::int64_t analyticOpt(Family family, int k, std::int64_t n, int i = 1);

/// Closed-form optimum over a count vector for size sets that have one:
/// {1}, {1/2, 1} and {1/3, 2/3}. Returns nullopt otherwise.
std::optional<std::int64_t> closedFormOpt(const SizeSet& sizes, const CountVector& counts);

}  // namespace bincov

#endif  // BINCOV_OPTCOVER_HPP_
