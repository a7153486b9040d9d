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

// Online bin covering algorithms.
//
// Each algorithm is a streaming object: feed items with place() in arrival
// order, then call finish() once to obtain the RunRecord. The run*()
// helpers wrap this for whole instances.

#ifndef BINCOV_ONLINEALGS_HPP_
#define BINCOV_ONLINEALGS_HPP_

#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bincov/bintypes.hpp"
#include "bincov/core.hpp"

namespace bincov {

struct RunRecord {
  std::string alg;
  Covering covering;
  std::int64_t profit = 0;
  std::int64_t g = 0;             // completed groups
  std::int64_t groupsOpened = 0;
  std::int64_t extraBins = 0;
  std::int64_t learningItems = 0;  // items placed before predictions were formed
  std::vector<std::pair<std::string, std::string>> params;

  explicit RunRecord(SizeSet sizes) : covering(std::move(sizes)) {}
};

class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual void place(ItemId item, SizeIndex size) = 0;
  /// Hands over the final state. The object must not be used afterwards.
  virtual RunRecord finish() = 0;
};

/// Dual-Next-Fit: one open bin; it closes as soon as it is covered.
class DualNextFit : public OnlineAlgorithm {
 public:
  explicit DualNextFit(SizeSet sizes, OwnerKind owner = OwnerKind::kDnf);

  void place(ItemId item, SizeIndex size) override;
  RunRecord finish() override;
  const Covering& covering() const { return covering_; }

 private:
  Covering covering_;
  OwnerKind owner_;
};

struct GroupCoveringParams {
  Rational epsilon;
  std::int64_t mEps = 0;
  std::int64_t mKEps = 0;
  FrequencyVector prediction;
  CountVector sigmaSub;
  Covering layout;  // placeholder bins, one group's worth
};

/// Builds m_eps = ceil(3 tau tau^m / eps), m_{k,eps} = m_eps + k, the scaled
/// profile floor(f_i m_{k,eps}) and an optimal non-wasteful layout for it.
GroupCoveringParams groupCoveringParams(const BinTypeCatalog& catalog,
                                        const FrequencyVector& prediction, const Rational& epsilon);

/// Group Covering: tiles the input with copies of the layout, filling
/// placeholders in creation order. Sizes the layout does not expect go to
/// extra bins packed by Dual-Next-Fit.
class GroupCovering : public OnlineAlgorithm {
 public:
  explicit GroupCovering(GroupCoveringParams params);

  void place(ItemId item, SizeIndex size) override;
  RunRecord finish() override;

  std::int64_t completedGroups() const { return completed_; }
  std::int64_t openGroups() const { return static_cast<std::int64_t>(remaining_.size()); }
  const GroupCoveringParams& params() const { return params_; }

 private:
  struct FreeSlot {
    std::uint32_t group;
    std::uint32_t bin;
    std::uint32_t slot;
  };

  void openGroup();

  GroupCoveringParams params_;
  Covering groups_;
  DualNextFit extra_;
  std::int64_t extraBins_ = 0;
  std::vector<std::deque<FreeSlot>> free_;
  std::vector<std::uint32_t> remaining_;
  std::int64_t completed_ = 0;
};

/// Trust level lambda = kappa / ell, kept as given (not reduced).
struct TrustLevel {
  std::int64_t kappa = 0;
  std::int64_t ell = 1;

  TrustLevel() = default;
  TrustLevel(std::int64_t kappa, std::int64_t ell);
  Rational value() const { return Rational(kappa, ell); }
  std::string toString() const;

  /// "k/l" keeps both numbers; "0", "1" or a decimal is converted to lowest terms.
  static TrustLevel parse(std::string_view text);
};

/// Routes the c-th occurrence (0-based) of each size to `inner` when
/// c mod ell <= ell - kappa - 1 and to Group Covering otherwise.
class Hybrid : public OnlineAlgorithm {
 public:
  Hybrid(std::unique_ptr<OnlineAlgorithm> inner, GroupCoveringParams params, TrustLevel lambda);

  void place(ItemId item, SizeIndex size) override;
  RunRecord finish() override;

 private:
  std::unique_ptr<OnlineAlgorithm> inner_;
  GroupCovering pc_;
  TrustLevel lambda_;
  std::vector<std::int64_t> seen_;
};

struct PopcParams {
  Rational epsilon;
  Rational delta;
  std::int64_t mHalf = 0;
  std::int64_t mKHalf = 0;
  std::int64_t phi = 0;
};

/// Phi = max{16 k (m+1)^2, ceil(32 (m+1)^2 ln(2 / (1 - sqrt(1 - delta))))}
/// with m = m_{k,eps/2}; the logarithm term is rounded upward.
PopcParams popcParams(const BinTypeCatalog& catalog, const Rational& epsilon, const Rational& delta);

/// Learns frequencies from the first Phi items (placed by Dual-Next-Fit),
/// then runs Group Covering with eps/2 on the learned profile.
class Popc : public OnlineAlgorithm {
 public:
  Popc(std::shared_ptr<const BinTypeCatalog> catalog, const Rational& epsilon, const Rational& delta);

  void place(ItemId item, SizeIndex size) override;
  RunRecord finish() override;

  const PopcParams& params() const { return params_; }

 private:
  std::shared_ptr<const BinTypeCatalog> catalog_;
  PopcParams params_;
  DualNextFit learner_;
  CountVector counts_;
  std::int64_t seen_ = 0;
  std::unique_ptr<GroupCovering> pc_;
};

RunRecord dnfRun(const Instance& sigma);
RunRecord pcRun(const Instance& sigma, const FrequencyVector& prediction, const Rational& epsilon);
RunRecord pcRun(const Instance& sigma, const BinTypeCatalog& catalog,
                const FrequencyVector& prediction, const Rational& epsilon);
/// `inner` defaults to Dual-Next-Fit.
RunRecord hybridRun(const Instance& sigma, const FrequencyVector& prediction, const Rational& epsilon,
                    TrustLevel lambda, std::unique_ptr<OnlineAlgorithm> inner = nullptr);
RunRecord hybridRun(const Instance& sigma, const BinTypeCatalog& catalog,
                    const FrequencyVector& prediction, const Rational& epsilon, TrustLevel lambda,
                    std::unique_ptr<OnlineAlgorithm> inner = nullptr);
RunRecord popcRun(const Instance& sigma, const Rational& epsilon, const Rational& delta);

inline std::int64_t numCompletedGroups(const RunRecord& record) { return record.g; }

struct Splitting {
  std::vector<Instance> parts;  // sigma_1 .. sigma_ell
  Instance excess;              // sigma_e
};

Splitting lambdaSplit(const Instance& sigma, std::int64_t ell);

/// ceil(max{4k / gamma^2, 8 / gamma^2 * ln(2 / delta)}), logarithm rounded up.
std::int64_t pacThreshold(std::int64_t k, const Rational& gamma, const Rational& delta);

FrequencyVector empiricalFrequencies(const Instance& prefix);

Rational l1Distance(const FrequencyVector& a, const FrequencyVector& b);

}  // namespace bincov

#endif  // BINCOV_ONLINEALGS_HPP_
