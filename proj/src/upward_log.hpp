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

// Upward-rounded logarithm terms evaluated with MPFR.

#ifndef BINCOV_SRC_UPWARD_LOG_HPP_
#define BINCOV_SRC_UPWARD_LOG_HPP_

#include "bincov/rational.hpp"

namespace bincov::detail {

/// ceil(factor * ln(x)) for factor >= 0 and x >= 1; never below the real value.
BigInt ceilScaledLog(const Rational& factor, const Rational& x);

/// ceil(factor * ln(2 / (1 - sqrt(1 - delta)))) for 0 < delta < 1.
BigInt ceilScaledConfidenceLog(const Rational& factor, const Rational& delta);

}  // namespace bincov::detail

#endif  // BINCOV_SRC_UPWARD_LOG_HPP_
