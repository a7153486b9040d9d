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

#ifndef BINCOV_FAMILY_HPP_
#define BINCOV_FAMILY_HPP_

#include <string>
#include <string_view>

namespace bincov {

/// Instance families: the two tradeoff sequences, the impossibility
/// family <(1/k)^n, ((k-i)/k)^floor(n/i)>, the all-1/k anti-robust
/// sequence, and i.i.d. stochastic sampling.
enum class Family { kTradeoff1, kTradeoff2, kImpossibility, kAntiRobust, kStochastic };

std::string familyName(Family family);
/// Accepts the CLI spellings: tradeoff1, tradeoff2, impossibility,
/// anti-robust, stochastic.
Family parseFamily(std::string_view name);

}  // namespace bincov

#endif  // BINCOV_FAMILY_HPP_
