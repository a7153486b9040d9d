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

#include "bincov/onlinealgs.hpp"

#include <algorithm>

#include "bincov/optcover.hpp"
#include "upward_log.hpp"

namespace bincov {

// ---- Dual-Next-Fit ----

DualNextFit::DualNextFit(SizeSet sizes, OwnerKind owner) : covering_(std::move(sizes)), owner_(owner) {}

void DualNextFit::place(ItemId item, SizeIndex size) {
  if (covering_.binCount() == 0 || covering_.lastCovered()) covering_.openBin(Owner{owner_});
  covering_.addItem(item, size);
}

RunRecord DualNextFit::finish() {
  RunRecord record(covering_.sizes());
  record.alg = "dnf";
  record.profit = covering_.profit();
  record.covering = std::move(covering_);
  return record;
}

// ---- Group Covering ----

GroupCoveringParams groupCoveringParams(const BinTypeCatalog& catalog,
                                        const FrequencyVector& prediction, const Rational& epsilon) {
  const SizeSet& sizes = catalog.sizes();
  if (epsilon <= 0 || epsilon >= 1) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (prediction.size() != sizes.k()) throw InvalidArgument("prediction length differs from k");
  const Rational scaled = Rational(3 * static_cast<std::int64_t>(catalog.tauS()) *
                                   static_cast<std::int64_t>(catalog.tauSmax())) /
                          epsilon;
  const std::int64_t mEps = toInt64(ceilOf(scaled));
  const std::int64_t mKEps = mEps + static_cast<std::int64_t>(sizes.k());
  CountVector sub(sizes.k());
  for (std::size_t i = 0; i < sizes.k(); ++i) sub[i] = toInt64(floorOf(prediction[i] * mKEps));
  Covering layout = optSolutionNonWasteful(sub, catalog);
  return GroupCoveringParams{epsilon, mEps, mKEps, prediction, sub, std::move(layout)};
}

GroupCovering::GroupCovering(GroupCoveringParams params)
    : params_(std::move(params)),
      groups_(params_.layout.sizes()),
      extra_(params_.layout.sizes(), OwnerKind::kExtra),
      free_(params_.layout.sizes().k()) {}

void GroupCovering::openGroup() {
  const auto group = static_cast<std::uint32_t>(remaining_.size());
  std::uint32_t slots = 0;
  for (std::size_t b = 0; b < params_.layout.binCount(); ++b) {
    const auto bin = static_cast<std::uint32_t>(groups_.openBin(
        Owner{OwnerKind::kGroup, group + 1, static_cast<std::uint32_t>(b)}));
    for (const Slot& s : params_.layout.bin(b).slots()) {
      const auto slot = static_cast<std::uint32_t>(groups_.addPlaceholder(s.size));
      free_[s.size].push_back(FreeSlot{group, bin, slot});
      ++slots;
    }
  }
  remaining_.push_back(slots);
}

void GroupCovering::place(ItemId item, SizeIndex size) {
  std::deque<FreeSlot>& queue = free_[size];
  if (queue.empty()) {
    if (params_.sigmaSub[size] == 0) {
      const std::size_t before = extra_.covering().binCount();
      extra_.place(item, size);
      extraBins_ += static_cast<std::int64_t>(extra_.covering().binCount() - before);
      return;
    }
    openGroup();
  }
  const FreeSlot target = queue.front();
  queue.pop_front();
  groups_.fillPlaceholder(target.bin, target.slot, item);
  if (--remaining_[target.group] == 0) ++completed_;
}

RunRecord GroupCovering::finish() {
  RunRecord record(groups_.sizes());
  record.alg = "pc";
  record.covering = std::move(groups_);
  record.covering.append(extra_.covering());
  record.profit = record.covering.profit();
  record.g = completed_;
  record.groupsOpened = static_cast<std::int64_t>(remaining_.size());
  record.extraBins = extraBins_;
  record.params = {{"eps", formatRational(params_.epsilon)},
                   {"m_eps", std::to_string(params_.mEps)},
                   {"m_k_eps", std::to_string(params_.mKEps)}};
  return record;
}

// ---- Hybrid ----

TrustLevel::TrustLevel(std::int64_t kappa, std::int64_t ell) : kappa(kappa), ell(ell) {
  if (ell < 1 || kappa < 0 || kappa > ell) {
    throw InvalidArgument("trust level needs 0 <= kappa <= ell and ell >= 1");
  }
}

std::string TrustLevel::toString() const { return std::to_string(kappa) + "/" + std::to_string(ell); }

TrustLevel TrustLevel::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational kappa = parseRational(text.substr(0, slash));
    const Rational ell = parseRational(text.substr(slash + 1));
    if (denominator(kappa) != 1 || denominator(ell) != 1) {
      throw InvalidArgument("trust level '" + std::string(text) + "' must be a ratio of integers");
    }
    return TrustLevel(toInt64(numerator(kappa)), toInt64(numerator(ell)));
  }
  const Rational value = parseRational(text);
  return TrustLevel(toInt64(numerator(value)), toInt64(denominator(value)));
}

Hybrid::Hybrid(std::unique_ptr<OnlineAlgorithm> inner, GroupCoveringParams params, TrustLevel lambda)
    : inner_(std::move(inner)), pc_(std::move(params)), lambda_(lambda) {
  if (!inner_) throw InvalidArgument("hybrid needs an inner algorithm");
  seen_.assign(pc_.params().layout.sizes().k(), 0);
}

void Hybrid::place(ItemId item, SizeIndex size) {
  const std::int64_t j = seen_[size]++ % lambda_.ell;
  if (j <= lambda_.ell - lambda_.kappa - 1) {
    inner_->place(item, size);
  } else {
    pc_.place(item, size);
  }
}

RunRecord Hybrid::finish() {
  RunRecord inner = inner_->finish();
  RunRecord pc = pc_.finish();
  RunRecord record(inner.covering.sizes());
  record.alg = "hybrid";
  record.covering = std::move(inner.covering);
  record.covering.append(pc.covering);
  record.profit = record.covering.profit();
  record.g = pc.g;
  record.groupsOpened = pc.groupsOpened;
  record.extraBins = pc.extraBins;
  record.params = std::move(pc.params);
  record.params.emplace_back("lambda", lambda_.toString());
  record.params.emplace_back("inner", inner.alg);
  return record;
}

// ---- POPC ----

PopcParams popcParams(const BinTypeCatalog& catalog, const Rational& epsilon, const Rational& delta) {
  if (epsilon <= 0 || epsilon >= 1) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (delta <= 0 || delta >= 1) throw InvalidArgument("delta must lie in (0, 1)");
  const auto k = static_cast<std::int64_t>(catalog.sizes().k());
  const Rational half = epsilon / 2;
  const std::int64_t mHalf = toInt64(ceilOf(
      Rational(3 * static_cast<std::int64_t>(catalog.tauS()) *
               static_cast<std::int64_t>(catalog.tauSmax())) /
      half));
  const std::int64_t mKHalf = mHalf + k;
  const BigInt sq = BigInt(mKHalf + 1) * (mKHalf + 1);
  const BigInt first = 16 * k * sq;
  const BigInt second = detail::ceilScaledConfidenceLog(Rational(32 * sq), delta);
  return PopcParams{epsilon, delta, mHalf, mKHalf, toInt64(std::max(first, second))};
}

Popc::Popc(std::shared_ptr<const BinTypeCatalog> catalog, const Rational& epsilon,
           const Rational& delta)
    : catalog_(std::move(catalog)),
      params_(popcParams(*catalog_, epsilon, delta)),
      learner_(catalog_->sizes()),
      counts_(catalog_->sizes().k()) {}

void Popc::place(ItemId item, SizeIndex size) {
  if (seen_ < params_.phi) {
    learner_.place(item, size);
    ++counts_[size];
    if (++seen_ == params_.phi) {
      std::vector<Rational> f;
      for (std::size_t i = 0; i < counts_.size(); ++i) f.emplace_back(counts_[i], params_.phi);
      pc_ = std::make_unique<GroupCovering>(
          groupCoveringParams(*catalog_, FrequencyVector(std::move(f)), params_.epsilon / 2));
    }
    return;
  }
  pc_->place(item, size);
}

RunRecord Popc::finish() {
  RunRecord record = learner_.finish();
  record.alg = "popc";
  record.learningItems = seen_;
  if (pc_) {
    RunRecord pc = pc_->finish();
    record.covering.append(pc.covering);
    record.g = pc.g;
    record.groupsOpened = pc.groupsOpened;
    record.extraBins = pc.extraBins;
  }
  record.profit = record.covering.profit();
  record.params = {{"eps", formatRational(params_.epsilon)},
                   {"delta", formatRational(params_.delta)},
                   {"phi", std::to_string(params_.phi)}};
  return record;
}

// ---- whole-instance drivers ----

namespace {

RunRecord drive(OnlineAlgorithm& alg, const Instance& sigma) {
  for (std::size_t t = 0; t < sigma.size(); ++t) alg.place(static_cast<ItemId>(t), sigma[t]);
  return alg.finish();
}

}  // namespace

RunRecord dnfRun(const Instance& sigma) {
  DualNextFit dnf(sigma.sizes());
  return drive(dnf, sigma);
}

RunRecord pcRun(const Instance& sigma, const BinTypeCatalog& catalog,
                const FrequencyVector& prediction, const Rational& epsilon) {
  GroupCovering pc(groupCoveringParams(catalog, prediction, epsilon));
  return drive(pc, sigma);
}

RunRecord pcRun(const Instance& sigma, const FrequencyVector& prediction, const Rational& epsilon) {
  return pcRun(sigma, enumerateBinTypes(sigma.sizes()), prediction, epsilon);
}

RunRecord hybridRun(const Instance& sigma, const BinTypeCatalog& catalog,
                    const FrequencyVector& prediction, const Rational& epsilon, TrustLevel lambda,
                    std::unique_ptr<OnlineAlgorithm> inner) {
  if (!inner) inner = std::make_unique<DualNextFit>(sigma.sizes());
  Hybrid hybrid(std::move(inner), groupCoveringParams(catalog, prediction, epsilon), lambda);
  return drive(hybrid, sigma);
}

RunRecord hybridRun(const Instance& sigma, const FrequencyVector& prediction, const Rational& epsilon,
                    TrustLevel lambda, std::unique_ptr<OnlineAlgorithm> inner) {
  return hybridRun(sigma, enumerateBinTypes(sigma.sizes()), prediction, epsilon, lambda,
                   std::move(inner));
}

RunRecord popcRun(const Instance& sigma, const Rational& epsilon, const Rational& delta) {
  Popc popc(std::make_shared<const BinTypeCatalog>(enumerateBinTypes(sigma.sizes())), epsilon, delta);
  return drive(popc, sigma);
}

// ---- splitting and estimation ----

Splitting lambdaSplit(const Instance& sigma, std::int64_t ell) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
  const SizeSet& sizes = sigma.sizes();
  const std::size_t k = sizes.k();
  std::vector<std::vector<SizeIndex>> parts(static_cast<std::size_t>(ell));
  std::vector<std::int64_t> c(k, 0);
  for (SizeIndex a : sigma.items()) parts[static_cast<std::size_t>(c[a]++ % ell)].push_back(a);

  // Parts 1..j of every size with c mod ell = j give up their last item of that size.
  std::vector<SizeIndex> excess;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t j = c[i] % ell;
    for (std::int64_t p = 0; p < j; ++p) {
      std::vector<SizeIndex>& part = parts[static_cast<std::size_t>(p)];
      const auto last = std::find(part.rbegin(), part.rend(), static_cast<SizeIndex>(i));
      part.erase(std::next(last).base());
      excess.push_back(static_cast<SizeIndex>(i));
    }
  }
  Splitting out{{}, Instance(sizes, std::move(excess))};
  for (auto& part : parts) out.parts.emplace_back(sizes, std::move(part));
  return out;
}

std::int64_t pacThreshold(std::int64_t k, const Rational& gamma, const Rational& delta) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (gamma <= 0) throw InvalidArgument("gamma must be positive");
  if (delta <= 0 || delta >= 1) throw InvalidArgument("delta must lie in (0, 1)");
  const Rational inv = 1 / (gamma * gamma);
  const BigInt first = ceilOf(4 * k * inv);
  const BigInt second = detail::ceilScaledLog(8 * inv, 2 / delta);
  return toInt64(std::max(first, second));
}

FrequencyVector empiricalFrequencies(const Instance& prefix) { return frequencies(prefix); }

Rational l1Distance(const FrequencyVector& a, const FrequencyVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("frequency vectors differ in length");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += abs(a[i] - b[i]);
  return sum;
}

}  // namespace bincov
