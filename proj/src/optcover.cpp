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

#include "bincov/optcover.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

namespace bincov {
namespace {

struct PackType {
  Multiset multiset;
  std::vector<std::int64_t> need;  // items per size
  std::int64_t items = 0;
  std::int64_t waste = 0;  // total - unit, in units
};

// Descending lexicographic order of the non-increasing index sequences.
bool canonicalBefore(const Multiset& a, const Multiset& b) {
  return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
}

std::vector<PackType> minimalCoveredTypes(const BinTypeCatalog& catalog) {
  const SizeSet& sizes = catalog.sizes();
  std::vector<PackType> out;
  for (const auto& [multiset, orderings] : catalog.multisetIndex()) {
    const BinType& t = catalog.types()[orderings.front()];
    if (!t.covered) continue;
    // Dropping the smallest item must uncover the bin.
    if (t.totalUnits - sizes.units(multiset.front()) >= sizes.unit()) continue;
    PackType p;
    p.multiset = multiset;
    p.need.assign(sizes.k(), 0);
    for (SizeIndex i : multiset) ++p.need[i];
    p.items = static_cast<std::int64_t>(multiset.size());
    p.waste = t.totalUnits - sizes.unit();
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const PackType& a, const PackType& b) {
    return canonicalBefore(a.multiset, b.multiset);
  });
  return out;
}

std::int64_t maxCopies(const std::vector<std::int64_t>& res, const PackType& t) {
  std::int64_t c = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (t.need[i] > 0) c = std::min(c, res[i] / t.need[i]);
  }
  return c;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// LP relaxation max sum x_t subject to sum_t need_t x_t <= res, x >= 0,
// over types [first, end). Dense tableau simplex with Bland's rule; k rows.
class Relaxation {
 public:
  explicit Relaxation(const std::vector<PackType>& types) : types_(types) {}

  // Fills `x` (indexed like the full type list) and returns the LP value.
  double solve(std::size_t first, const std::vector<std::int64_t>& res, std::vector<double>* x = nullptr) {
    const std::size_t m = res.size();
    const std::size_t cols = types_.size() - first;
    const std::size_t width = cols + m + 1;
    tab_.assign((m + 1) * width, 0.0);
    basis_.resize(m);
    auto at = [&](std::size_t r, std::size_t c) -> double& { return tab_[r * width + c]; };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = 0; c < cols; ++c) at(i, c) = static_cast<double>(types_[first + c].need[i]);
      at(i, cols + i) = 1.0;
      at(i, width - 1) = static_cast<double>(res[i]);
      basis_[i] = cols + i;
    }
    for (std::size_t c = 0; c < cols; ++c) at(m, c) = -1.0;
    constexpr double kTol = 1e-12;
    for (;;) {
      std::size_t enter = width;
      for (std::size_t c = 0; c + 1 < width; ++c) {
        if (at(m, c) < -kTol) {
          enter = c;
          break;
        }
      }
      if (enter == width) break;
      std::size_t leave = m;
      double best = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (at(i, enter) <= kTol) continue;
        const double ratio = at(i, width - 1) / at(i, enter);
        if (leave == m || ratio < best - kTol || (ratio <= best + kTol && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // Unbounded is impossible: every type needs at least one item.
      const double pivot = at(leave, enter);
      for (std::size_t c = 0; c < width; ++c) at(leave, c) /= pivot;
      for (std::size_t r = 0; r <= m; ++r) {
        if (r == leave || at(r, enter) == 0.0) continue;
        const double factor = at(r, enter);
        for (std::size_t c = 0; c < width; ++c) at(r, c) -= factor * at(leave, c);
      }
      basis_[leave] = enter;
    }
    if (x != nullptr) {
      x->assign(types_.size(), 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        if (basis_[i] < cols) (*x)[first + basis_[i]] = std::max(0.0, at(i, width - 1));
      }
    }
    return at(m, width - 1);
  }

  // Largest integer the relaxation cannot rule out, with slack for rounding.
  std::int64_t bound(std::size_t first, const std::vector<std::int64_t>& res) {
    const double z = solve(first, res);
    return static_cast<std::int64_t>(std::floor(z * (1 + 1e-9) + 1e-6));
  }

 private:
  const std::vector<PackType>& types_;
  std::vector<double> tab_;
  std::vector<std::size_t> basis_;
};

class Search {
 public:
  Search(const SizeSet& sizes, std::vector<PackType> types, OptOptions options)
      : sizes_(sizes), types_(std::move(types)), options_(options), lp_(types_) {
    qmin_ = std::numeric_limits<std::int64_t>::max();
    for (const PackType& t : types_) qmin_ = std::min(qmin_, t.items);
  }

  std::vector<std::int64_t> run(const std::vector<std::int64_t>& counts) {
    chosen_.assign(types_.size(), 0);
    best_ = 0;
    bestChoice_ = chosen_;
    if (types_.empty()) return bestChoice_;
    warmStart(counts);
    if (best_ < std::min(bound(counts), lp_.bound(0, counts))) dfs(0, counts, 0);
    return bestChoice_;
  }

  std::int64_t best() const { return best_; }
  std::size_t states() const { return memo_.size(); }

 private:
  std::int64_t bound(const std::vector<std::int64_t>& res) const {
    __int128 units = 0;
    std::int64_t items = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
      units += static_cast<__int128>(res[i]) * sizes_.units(i);
      items += res[i];
    }
    return std::min(static_cast<std::int64_t>(units / sizes_.unit()), items / qmin_);
  }

  void greedy(const std::vector<std::size_t>& order, std::vector<std::int64_t> res,
              std::vector<std::int64_t> choice = {}) {
    if (choice.empty()) choice.assign(types_.size(), 0);
    std::int64_t total = 0;
    for (std::int64_t c : choice) total += c;
    for (std::size_t j : order) {
      const std::int64_t c = maxCopies(res, types_[j]);
      choice[j] += c;
      total += c;
      for (std::size_t i = 0; i < res.size(); ++i) res[i] -= c * types_[j].need[i];
    }
    if (total > best_) {
      best_ = total;
      bestChoice_ = choice;
    }
  }

  void warmStart(const std::vector<std::int64_t>& counts) {
    std::vector<std::size_t> order(types_.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    greedy(order, counts);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return types_[a].waste < types_[b].waste;
    });
    greedy(order, counts);

    // Round the relaxation down, then finish greedily in both orders.
    std::vector<double> x;
    lp_.solve(0, counts, &x);
    std::vector<std::int64_t> base(types_.size(), 0);
    std::vector<std::int64_t> res = counts;
    for (std::size_t j = 0; j < types_.size(); ++j) {
      base[j] = std::min(static_cast<std::int64_t>(std::floor(x[j] + 1e-9)), maxCopies(res, types_[j]));
      for (std::size_t i = 0; i < res.size(); ++i) res[i] -= base[j] * types_[j].need[i];
    }
    greedy(order, res, base);
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    greedy(order, res, base);
  }

  void dfs(std::size_t j, const std::vector<std::int64_t>& res, std::int64_t profit) {
    if (profit + bound(res) <= best_) return;
    if (j + 1 < types_.size() && profit + lp_.bound(j, res) <= best_) return;
    const PackType& t = types_[j];
    const std::int64_t most = maxCopies(res, t);
    if (j + 1 == types_.size()) {
      if (profit + most > best_) {
        best_ = profit + most;
        chosen_[j] = most;
        bestChoice_ = chosen_;
      }
      return;
    }
    std::vector<std::int64_t> key = res;
    key.push_back(static_cast<std::int64_t>(j));
    auto [it, inserted] = memo_.try_emplace(std::move(key), profit);
    if (!inserted) {
      if (it->second >= profit) return;
      it->second = profit;
    } else if (memo_.size() > options_.nodeBudget) {
      throw BudgetExceeded("exact optimum search exceeded " + std::to_string(options_.nodeBudget) +
                           " states; use an analytic optimum or explicit bounds");
    }
    std::vector<std::int64_t> next(res.size());
    for (std::int64_t c = most; c >= 0; --c) {
      for (std::size_t i = 0; i < res.size(); ++i) next[i] = res[i] - c * t.need[i];
      chosen_[j] = c;
      dfs(j + 1, next, profit + c);
    }
    chosen_[j] = 0;
  }

  const SizeSet& sizes_;
  std::vector<PackType> types_;
  OptOptions options_;
  std::int64_t qmin_ = 1;
  std::int64_t best_ = 0;
  std::vector<std::int64_t> chosen_;
  std::vector<std::int64_t> bestChoice_;
  std::unordered_map<std::vector<std::int64_t>, std::int64_t, VectorHash> memo_;
  Relaxation lp_;
};

}  // namespace

OptResult optCover(const CountVector& counts, const BinTypeCatalog& catalog, OptOptions options) {
  const SizeSet& sizes = catalog.sizes();
  if (counts.size() != sizes.k()) throw InvalidArgument("count vector length differs from k");
  std::vector<PackType> types = minimalCoveredTypes(catalog);
  Search search(sizes, types, options);
  const std::vector<std::int64_t> choice = search.run(counts.values());

  OptResult result;
  result.profit = search.best();
  result.states = search.states();
  result.leftovers = counts;
  for (std::size_t j = 0; j < types.size(); ++j) {
    if (choice[j] == 0) continue;
    result.typeCounts.emplace_back(types[j].multiset, choice[j]);
    for (std::size_t i = 0; i < sizes.k(); ++i) result.leftovers[i] -= choice[j] * types[j].need[i];
  }
  return result;
}

Covering optSolutionNonWasteful(const CountVector& counts, const BinTypeCatalog& catalog,
                                OptOptions options) {
  const SizeSet& sizes = catalog.sizes();
  const OptResult opt = optCover(counts, catalog, options);
  Covering covering(sizes);
  ItemId next = 0;
  for (const auto& [multiset, copies] : opt.typeCounts) {
    const BinType t = nonWastefulOrdering(sizes, multiset);
    for (std::int64_t c = 0; c < copies; ++c) {
      covering.openBin(Owner{OwnerKind::kAlg});
      for (SizeIndex i : t.tuple) covering.addItem(next++, i);
    }
  }
  // Leftovers, largest first, dual-next-fit into fresh bins.
  bool open = false;
  for (std::size_t i = sizes.k(); i-- > 0;) {
    for (std::int64_t c = 0; c < opt.leftovers[i]; ++c) {
      if (!open || covering.lastCovered()) {
        covering.openBin(Owner{OwnerKind::kAlg});
        open = true;
      }
      covering.addItem(next++, static_cast<SizeIndex>(i));
    }
  }
  return covering;
}

std::int64_t optUpperBound(const SizeSet& sizes, const CountVector& counts) {
  if (counts.size() != sizes.k()) throw InvalidArgument("count vector length differs from k");
  BigInt units = 0;
  for (std::size_t i = 0; i < sizes.k(); ++i) units += BigInt(counts[i]) * sizes.units(i);
  return toInt64(units / sizes.unit());
}

std::int64_t analyticOpt(Family family, int k, std::int64_t n, int i) {
  if (k < 2) throw InvalidArgument("generator families require k >= 2");
  if (n < 0) throw InvalidArgument("n must be non-negative");
  switch (family) {
    case Family::kTradeoff1:
      return n;
    case Family::kTradeoff2:
      return n / 2;
    case Family::kImpossibility:
      if (i < 1 || i > k - 1) throw InvalidArgument("impossibility family requires 1 <= i <= k-1");
      return n / i;
    case Family::kAntiRobust:
      return n / k;
    case Family::kStochastic:
      break;
  }
  throw InvalidArgument("no closed-form optimum for family " + familyName(family));
}

std::optional<std::int64_t> closedFormOpt(const SizeSet& sizes, const CountVector& counts) {
  if (counts.size() != sizes.k()) throw InvalidArgument("count vector length differs from k");
  if (sizes.k() == 1 && sizes[0].value() == 1) return counts[0];
  if (sizes.k() != 2) return std::nullopt;
  const Rational& a = sizes[0].value();
  const Rational& b = sizes[1].value();
  if (a == Rational(1, 2) && b == 1) return counts[1] + counts[0] / 2;
  if (a == Rational(1, 3) && b == Rational(2, 3)) {
    // Pair each 2/3 with a 1/3 first; surplus 1/3s go in threes, surplus
    // 2/3s in twos.
    const std::int64_t thirds = counts[0];
    const std::int64_t twoThirds = counts[1];
    if (thirds >= twoThirds) return twoThirds + (thirds - twoThirds) / 3;
    return thirds + (twoThirds - thirds) / 2;
  }
  return std::nullopt;
}

}  // namespace bincov
