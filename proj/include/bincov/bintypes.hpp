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

// Catalog of non-wasteful bin types: ordered tuples of sizes in which
// every proper prefix sums to less than 1.

#ifndef BINCOV_BINTYPES_HPP_
#define BINCOV_BINTYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "bincov/core.hpp"

namespace bincov {

inline constexpr std::size_t kDefaultTypeCap = 1'000'000;

struct BinType {
  std::vector<SizeIndex> tuple;
  std::int64_t totalUnits = 0;  // sum in SizeSet units
  bool covered = false;
};

using Multiset = std::vector<SizeIndex>;  // sorted ascending

class BinTypeCatalog {
 public:
  BinTypeCatalog(SizeSet sizes, std::vector<BinType> types);

  const SizeSet& sizes() const { return sizes_; }
  const std::vector<BinType>& types() const { return types_; }
  std::size_t tauS() const { return types_.size(); }
  std::size_t tauSmax() const { return tauSmax_; }
  /// Indices into types() of the types with total >= 1.
  const std::vector<std::size_t>& coveredTypes() const { return covered_; }
  /// Canonical multiset -> indices of all catalog orderings realizing it.
  const std::map<Multiset, std::vector<std::size_t>>& multisetIndex() const { return index_; }

  Rational total(const BinType& t) const { return Rational(t.totalUnits, sizes_.unit()); }

 private:
  SizeSet sizes_;
  std::vector<BinType> types_;
  std::size_t tauSmax_ = 0;
  std::vector<std::size_t> covered_;
  std::map<Multiset, std::vector<std::size_t>> index_;
};

/// Depth-first expansion from the empty prefix, children in ascending size
/// order. Throws CatalogOverflow once more than `cap` types are generated.
BinTypeCatalog enumerateBinTypes(const SizeSet& sizes, std::size_t cap = kDefaultTypeCap);

Multiset canonicalMultiset(const BinType& type);

/// An ordering of `multiset` whose proper prefixes all sum below 1: the
/// remaining items in non-increasing order followed by one largest item.
/// Throws NoOrdering when no such ordering exists.
BinType nonWastefulOrdering(const SizeSet& sizes, Multiset multiset);

}  // namespace bincov

#endif  // BINCOV_BINTYPES_HPP_
