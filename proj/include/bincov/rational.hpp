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

#ifndef BINCOV_RATIONAL_HPP_
#define BINCOV_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bincov {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", "p" and finite decimals such as "0.6" or "-1.25".
Rational parseRational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string formatRational(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` places.
/// Deterministic across platforms (no floating point involved).
std::string toDecimal(const Rational& value, int digits);

BigInt floorOf(const Rational& value);
BigInt ceilOf(const Rational& value);

/// Narrowing helpers; throw InvalidArgument when the value does not fit.
std::int64_t toInt64(const BigInt& value);

double toDouble(const Rational& value);

}  // namespace bincov

#endif  // BINCOV_RATIONAL_HPP_
