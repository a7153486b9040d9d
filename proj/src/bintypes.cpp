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

#include "bincov/bintypes.hpp"

#include <algorithm>
#include <functional>

namespace bincov {

BinTypeCatalog::BinTypeCatalog(SizeSet sizes, std::vector<BinType> types)
    : sizes_(std::move(sizes)), types_(std::move(types)) {
  for (std::size_t i = 0; i < types_.size(); ++i) {
    tauSmax_ = std::max(tauSmax_, types_[i].tuple.size());
    if (types_[i].covered) covered_.push_back(i);
    index_[canonicalMultiset(types_[i])].push_back(i);
  }
}

BinTypeCatalog enumerateBinTypes(const SizeSet& sizes, std::size_t cap) {
  std::vector<BinType> types;
  std::vector<SizeIndex> prefix;
  const std::int64_t unit = sizes.unit();

  // Explicit recursion depth is bounded by ceil(1 / min(S)).
  std::function<void(std::int64_t)> expand = [&](std::int64_t sum) {
    for (std::size_t i = 0; i < sizes.k(); ++i) {
      prefix.push_back(static_cast<SizeIndex>(i));
      const std::int64_t total = sum + sizes.units(i);
      if (types.size() == cap) throw CatalogOverflow(types.size());
      types.push_back(BinType{prefix, total, total >= unit});
      if (total < unit) expand(total);
      prefix.pop_back();
    }
  };
  expand(0);
  return BinTypeCatalog(sizes, std::move(types));
}

Multiset canonicalMultiset(const BinType& type) {
  Multiset m = type.tuple;
  std::sort(m.begin(), m.end());
  return m;
}

BinType nonWastefulOrdering(const SizeSet& sizes, Multiset multiset) {
  if (multiset.empty()) throw NoOrdering("empty multiset has no bin type");
  for (SizeIndex i : multiset) {
    if (i >= sizes.k()) throw InvalidArgument("size index out of range");
  }
  std::sort(multiset.begin(), multiset.end(), std::greater<>());
  BinType t;
  t.tuple.assign(multiset.begin() + 1, multiset.end());
  t.tuple.push_back(multiset.front());
  std::int64_t prefix = 0;
  for (std::size_t j = 0; j + 1 < t.tuple.size(); ++j) prefix += sizes.units(t.tuple[j]);
  // Every ordering has some item last; putting the largest last minimizes
  // the prefix, so if this fails no permutation can succeed.
  if (prefix >= sizes.unit()) {
    throw NoOrdering("no non-wasteful ordering: items other than the largest already sum to >= 1");
  }
  t.totalUnits = prefix + sizes.units(t.tuple.back());
  t.covered = t.totalUnits >= sizes.unit();
  return t;
}

}  // namespace bincov
