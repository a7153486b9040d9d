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

// Exact domain types for discrete bin covering: sizes, instances,
// frequency vectors, bins and coverings.
//
// Every covering decision is made on integers. A SizeSet fixes a common
// denominator (its "unit") and stores each size as an integer multiple of
// 1/unit, so a bin is covered exactly when its level in units reaches unit.

#ifndef BINCOV_CORE_HPP_
#define BINCOV_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bincov/errors.hpp"
#include "bincov/rational.hpp"

namespace bincov {

using SizeIndex = std::uint16_t;
using ItemId = std::uint32_t;  // arrival position of an item in its instance

/// An item size: an exact rational in (0, 1], always in lowest terms.
class Size {
 public:
  explicit Size(Rational value);

  const Rational& value() const { return value_; }
  friend bool operator==(const Size&, const Size&) = default;
  friend bool operator<(const Size& a, const Size& b) { return a.value_ < b.value_; }

 private:
  Rational value_;
};

/// The finite set S of admissible sizes, strictly ascending.
class SizeSet {
 public:
  /// Throws InvalidArgument unless `sizes` is non-empty, strictly ascending
  /// and every entry lies in (0, 1].
  explicit SizeSet(std::vector<Rational> sizes);

  std::size_t k() const { return sizes_.size(); }
  const Size& operator[](std::size_t i) const { return sizes_[i]; }
  const std::vector<Size>& sizes() const { return sizes_; }

  /// Common denominator of all sizes.
  std::int64_t unit() const { return unit_; }
  /// Size i expressed in units (size_i = units(i) / unit()).
  std::int64_t units(std::size_t i) const { return units_[i]; }

  std::optional<SizeIndex> indexOf(const Rational& value) const;
  std::vector<std::string> toStrings() const;

  friend bool operator==(const SizeSet& a, const SizeSet& b) { return a.sizes_ == b.sizes_; }

 private:
  std::vector<Size> sizes_;
  std::int64_t unit_ = 1;
  std::vector<std::int64_t> units_;
};

/// F_k = {1/k, 2/k, ..., k/k}.
SizeSet makeFk(int k);

/// Parses a comma separated list such as "1/3,2/3".
SizeSet parseSizeSet(std::string_view text);

/// Number of items per size, indexed like the SizeSet.
class CountVector {
 public:
  CountVector() = default;
  explicit CountVector(std::size_t k) : counts_(k, 0) {}
  explicit CountVector(std::vector<std::int64_t> counts);

  std::size_t size() const { return counts_.size(); }
  std::int64_t& operator[](std::size_t i) { return counts_[i]; }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<std::int64_t>& values() const { return counts_; }
  std::int64_t total() const;

  CountVector& operator+=(const CountVector& other);
  friend CountVector operator+(CountVector a, const CountVector& b) { return a += b; }
  friend bool operator==(const CountVector&, const CountVector&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

/// A frequency vector over a size set: entries in [0, 1] summing to 1.
class FrequencyVector {
 public:
  /// Rejects entries outside [0, 1] and vectors whose sum is not exactly 1.
  explicit FrequencyVector(std::vector<Rational> entries);
  /// Scales non-negative weights to sum 1; rejects an all-zero vector.
  static FrequencyVector normalized(std::vector<Rational> weights);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<std::string> toStrings() const;

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// An online instance: item sizes (as indices into its SizeSet) in arrival
/// order.
class Instance {
 public:
  Instance(SizeSet sizes, std::vector<SizeIndex> items);

  const SizeSet& sizes() const { return sizes_; }
  std::span<const SizeIndex> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  SizeIndex operator[](std::size_t i) const { return items_[i]; }
  CountVector counts() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  SizeSet sizes_;
  std::vector<SizeIndex> items_;
};

/// f_i = n_i / n. Throws EmptyInstance for n = 0.
FrequencyVector frequencies(const Instance& instance);

enum class OwnerKind : std::uint8_t { kDnf, kGroup, kExtra, kAlg };

/// Which part of an algorithm a bin belongs to. `group` and `bin` are only
/// meaningful for group bins (group is 1-based, bin indexes the layout).
struct Owner {
  OwnerKind kind = OwnerKind::kAlg;
  std::uint32_t group = 0;
  std::uint32_t bin = 0;

  friend bool operator==(const Owner&, const Owner&) = default;
};

std::string ownerLabel(const Owner& owner);

inline constexpr ItemId kPlaceholder = std::numeric_limits<ItemId>::max();

/// A bin position holding either a real item or a placeholder of `size`.
struct Slot {
  ItemId item = kPlaceholder;
  SizeIndex size = 0;

  bool filled() const { return item != kPlaceholder; }
  friend bool operator==(const Slot&, const Slot&) = default;
};

class Covering;

/// Read-only view of one bin of a Covering.
class BinView {
 public:
  std::span<const Slot> slots() const;
  const Owner& owner() const;
  std::int64_t levelUnits() const;
  Rational level() const;
  bool covered() const;

 private:
  friend class Covering;
  BinView(const Covering* covering, std::size_t index) : covering_(covering), index_(index) {}
  const Covering* covering_;
  std::size_t index_;
};

/// A set of bins stored contiguously. Slots of a bin are fixed when the bin
/// is created, except for the most recently opened bin which may still grow.
class Covering {
 public:
  explicit Covering(SizeSet sizes);

  const SizeSet& sizes() const { return sizes_; }
  std::size_t binCount() const { return bins_.size(); }
  std::size_t slotCount() const { return slots_.size(); }
  BinView bin(std::size_t i) const { return BinView(this, i); }

  /// Opens a new, empty bin at the end and returns its index.
  std::size_t openBin(Owner owner);
  /// Appends a real item to the last bin.
  void addItem(ItemId item, SizeIndex size);
  /// Appends a placeholder to the last bin and returns the slot's index.
  std::size_t addPlaceholder(SizeIndex size);
  /// Replaces the placeholder at `slot` (inside bin `bin`) with `item`.
  void fillPlaceholder(std::size_t bin, std::size_t slot, ItemId item);

  std::int64_t lastLevelUnits() const;
  bool lastCovered() const;

  /// Bin count with level >= 1, maintained incrementally.
  std::int64_t profit() const { return covered_; }

  /// Appends all bins of `other` (which must share the size set).
  void append(const Covering& other);

  friend bool operator==(const Covering& a, const Covering& b);

 private:
  friend class BinView;
  struct BinRecord {
    std::uint32_t first = 0;
    std::uint32_t count = 0;
    Owner owner;
    std::int64_t level = 0;
  };

  void addToLevel(std::size_t bin, SizeIndex size);

  SizeSet sizes_;
  std::vector<BinRecord> bins_;
  std::vector<Slot> slots_;
  std::int64_t covered_ = 0;
};

/// Number of bins with level >= 1, recomputed from the bins.
std::int64_t profit(const Covering& covering);

/// True when every item of `instance` sits in exactly one slot of
/// `covering`, with a matching size.
bool conserves(const Covering& covering, const Instance& instance);

/// True when replaying each bin's items in arrival order never adds an
/// item to a bin whose level is already >= 1.
bool nonWasteful(const Covering& covering);

}  // namespace bincov

#endif  // BINCOV_CORE_HPP_
