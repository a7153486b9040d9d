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

#include "bincov/core.hpp"

#include <algorithm>
#include <numeric>

namespace bincov {
namespace {

// Levels stay below 2 * unit, and optimum bounds multiply counts by units,
// so the unit is kept well inside 64 bits.
constexpr std::int64_t kMaxUnit = std::int64_t{1} << 40;

}  // namespace

Size::Size(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ > 1) {
    throw InvalidArgument("size " + formatRational(value_) + " outside (0, 1]");
  }
}

SizeSet::SizeSet(std::vector<Rational> sizes) {
  if (sizes.empty()) throw InvalidArgument("size set must not be empty");
  if (sizes.size() > std::numeric_limits<SizeIndex>::max()) {
    throw InvalidArgument("too many sizes");
  }
  BigInt lcm = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    sizes_.emplace_back(sizes[i]);
    if (i > 0 && !(sizes[i - 1] < sizes[i])) {
      throw InvalidArgument("sizes must be distinct and ascending");
    }
    const BigInt den = boost::multiprecision::denominator(sizes[i]);
    lcm = boost::multiprecision::lcm(lcm, den);
    if (lcm > kMaxUnit) throw InvalidArgument("common denominator of sizes is too large");
  }
  unit_ = lcm.convert_to<std::int64_t>();
  for (const Size& s : sizes_) {
    units_.push_back(toInt64(boost::multiprecision::numerator(Rational(s.value() * unit_))));
  }
}

std::optional<SizeIndex> SizeSet::indexOf(const Rational& value) const {
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i].value() == value) return static_cast<SizeIndex>(i);
  }
  return std::nullopt;
}

std::vector<std::string> SizeSet::toStrings() const {
  std::vector<std::string> out;
  for (const Size& s : sizes_) out.push_back(formatRational(s.value()));
  return out;
}

SizeSet makeFk(int k) {
  if (k < 1) throw InvalidArgument("F_k requires k >= 1");
  std::vector<Rational> sizes;
  for (int i = 1; i <= k; ++i) sizes.emplace_back(i, k);
  return SizeSet(std::move(sizes));
}

SizeSet parseSizeSet(std::string_view text) {
  std::vector<Rational> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    sizes.push_back(parseRational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return SizeSet(std::move(sizes));
}

CountVector::CountVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  for (std::int64_t c : counts_) {
    if (c < 0) throw InvalidArgument("counts must be non-negative");
  }
}

std::int64_t CountVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

CountVector& CountVector::operator+=(const CountVector& other) {
  if (other.size() != size()) throw InvalidArgument("count vectors differ in length");
  for (std::size_t i = 0; i < size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

FrequencyVector::FrequencyVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("frequency vector must not be empty");
  Rational sum = 0;
  for (const Rational& e : entries_) {
    if (e < 0 || e > 1) throw InvalidArgument("frequency " + formatRational(e) + " outside [0, 1]");
    sum += e;
  }
  if (sum != 1) {
    throw InvalidArgument("frequencies sum to " + formatRational(sum) + ", expected 1");
  }
}

FrequencyVector FrequencyVector::normalized(std::vector<Rational> weights) {
  Rational sum = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw InvalidArgument("negative frequency weight");
    sum += w;
  }
  if (sum == 0) throw InvalidArgument("frequency weights are all zero");
  for (Rational& w : weights) w /= sum;
  return FrequencyVector(std::move(weights));
}

std::vector<std::string> FrequencyVector::toStrings() const {
  std::vector<std::string> out;
  for (const Rational& e : entries_) out.push_back(formatRational(e));
  return out;
}

Instance::Instance(SizeSet sizes, std::vector<SizeIndex> items)
    : sizes_(std::move(sizes)), items_(std::move(items)) {
  if (items_.size() >= kPlaceholder) throw InvalidArgument("instance too long");
  for (SizeIndex i : items_) {
    if (i >= sizes_.k()) throw InvalidArgument("item size index out of range");
  }
}

CountVector Instance::counts() const {
  CountVector counts(sizes_.k());
  for (SizeIndex i : items_) ++counts[i];
  return counts;
}

FrequencyVector frequencies(const Instance& instance) {
  if (instance.empty()) throw EmptyInstance();
  const CountVector counts = instance.counts();
  const auto n = static_cast<std::int64_t>(instance.size());
  std::vector<Rational> f;
  for (std::size_t i = 0; i < counts.size(); ++i) f.emplace_back(counts[i], n);
  return FrequencyVector(std::move(f));
}

std::string ownerLabel(const Owner& owner) {
  switch (owner.kind) {
    case OwnerKind::kDnf:
      return "dnf";
    case OwnerKind::kGroup:
      return "group";
    case OwnerKind::kExtra:
      return "extra";
    case OwnerKind::kAlg:
      return "alg";
  }
  return "alg";
}

std::span<const Slot> BinView::slots() const {
  const auto& rec = covering_->bins_[index_];
  return std::span<const Slot>(covering_->slots_).subspan(rec.first, rec.count);
}

const Owner& BinView::owner() const { return covering_->bins_[index_].owner; }

std::int64_t BinView::levelUnits() const { return covering_->bins_[index_].level; }

Rational BinView::level() const { return Rational(levelUnits(), covering_->sizes_.unit()); }

bool BinView::covered() const { return levelUnits() >= covering_->sizes_.unit(); }

Covering::Covering(SizeSet sizes) : sizes_(std::move(sizes)) {}

std::size_t Covering::openBin(Owner owner) {
  BinRecord rec;
  rec.first = static_cast<std::uint32_t>(slots_.size());
  rec.owner = owner;
  bins_.push_back(rec);
  return bins_.size() - 1;
}

void Covering::addToLevel(std::size_t bin, SizeIndex size) {
  BinRecord& rec = bins_[bin];
  const bool was = rec.level >= sizes_.unit();
  rec.level += sizes_.units(size);
  if (!was && rec.level >= sizes_.unit()) ++covered_;
}

void Covering::addItem(ItemId item, SizeIndex size) {
  if (bins_.empty()) throw InvalidArgument("no open bin");
  slots_.push_back(Slot{item, size});
  ++bins_.back().count;
  addToLevel(bins_.size() - 1, size);
}

std::size_t Covering::addPlaceholder(SizeIndex size) {
  if (bins_.empty()) throw InvalidArgument("no open bin");
  slots_.push_back(Slot{kPlaceholder, size});
  ++bins_.back().count;
  return slots_.size() - 1;
}

void Covering::fillPlaceholder(std::size_t bin, std::size_t slot, ItemId item) {
  const BinRecord& rec = bins_[bin];
  if (slot < rec.first || slot >= rec.first + rec.count || slots_[slot].filled()) {
    throw InvalidArgument("slot is not a placeholder of this bin");
  }
  slots_[slot].item = item;
  addToLevel(bin, slots_[slot].size);
}

std::int64_t Covering::lastLevelUnits() const { return bins_.empty() ? 0 : bins_.back().level; }

bool Covering::lastCovered() const { return !bins_.empty() && bins_.back().level >= sizes_.unit(); }

void Covering::append(const Covering& other) {
  if (!(other.sizes_ == sizes_)) throw InvalidArgument("coverings use different size sets");
  const auto offset = static_cast<std::uint32_t>(slots_.size());
  for (BinRecord rec : other.bins_) {
    rec.first += offset;
    bins_.push_back(rec);
  }
  slots_.insert(slots_.end(), other.slots_.begin(), other.slots_.end());
  covered_ += other.covered_;
}

bool operator==(const Covering& a, const Covering& b) {
  if (!(a.sizes_ == b.sizes_) || a.bins_.size() != b.bins_.size() || a.slots_ != b.slots_) {
    return false;
  }
  for (std::size_t i = 0; i < a.bins_.size(); ++i) {
    const auto& x = a.bins_[i];
    const auto& y = b.bins_[i];
    if (x.first != y.first || x.count != y.count || !(x.owner == y.owner) || x.level != y.level) {
      return false;
    }
  }
  return true;
}

std::int64_t profit(const Covering& covering) {
  std::int64_t covered = 0;
  for (std::size_t b = 0; b < covering.binCount(); ++b) {
    std::int64_t level = 0;
    for (const Slot& s : covering.bin(b).slots()) {
      if (s.filled()) level += covering.sizes().units(s.size);
    }
    if (level >= covering.sizes().unit()) ++covered;
  }
  return covered;
}

bool conserves(const Covering& covering, const Instance& instance) {
  if (!(covering.sizes() == instance.sizes())) return false;
  std::vector<char> seen(instance.size(), 0);
  std::size_t placed = 0;
  for (std::size_t b = 0; b < covering.binCount(); ++b) {
    for (const Slot& s : covering.bin(b).slots()) {
      if (!s.filled()) continue;
      if (s.item >= instance.size() || seen[s.item] || instance[s.item] != s.size) return false;
      seen[s.item] = 1;
      ++placed;
    }
  }
  return placed == instance.size();
}

bool nonWasteful(const Covering& covering) {
  std::vector<Slot> filled;
  for (std::size_t b = 0; b < covering.binCount(); ++b) {
    filled.clear();
    for (const Slot& s : covering.bin(b).slots()) {
      if (s.filled()) filled.push_back(s);
    }
    std::sort(filled.begin(), filled.end(),
              [](const Slot& x, const Slot& y) { return x.item < y.item; });
    std::int64_t level = 0;
    for (const Slot& s : filled) {
      if (level >= covering.sizes().unit()) return false;
      level += covering.sizes().units(s.size);
    }
    if (level != covering.bin(b).levelUnits()) return false;
  }
  return true;
}

}  // namespace bincov
