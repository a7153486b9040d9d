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

#include "bincov/rational.hpp"

#include <cctype>
#include <limits>

#include "bincov/errors.hpp"

namespace bincov {
namespace {

BigInt parseInteger(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(text));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parseRational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parseInteger(text.substr(0, slash), whole);
    BigInt den = parseInteger(text.substr(slash + 1), whole);
    if (den == 0) throw InvalidArgument("zero denominator: '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view intPart = text.substr(0, dot);
    std::string_view fracPart = text.substr(dot + 1);
    if (intPart.empty() && fracPart.empty()) {
      throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    }
    BigInt ip = intPart.empty() ? BigInt(0) : parseInteger(intPart, whole);
    BigInt fp = fracPart.empty() ? BigInt(0) : parseInteger(fracPart, whole);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fracPart.size()));
    value = Rational(ip * scale + fp, scale);
  } else {
    value = Rational(parseInteger(text, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string formatRational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string toDecimal(const Rational& value, int digits) {
  const bool negative = value < 0;
  const Rational mag = negative ? Rational(-value) : value;
  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  const Rational scaled = mag * scale;
  // Round half away from zero.
  BigInt rounded = floorOf(scaled + Rational(1, 2));
  std::string body = rounded.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && rounded != 0) body.insert(0, "-");
  return body;
}

BigInt floorOf(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceilOf(const Rational& value) {
  return -floorOf(Rational(-value));
}

std::int64_t toInt64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidArgument("integer out of 64-bit range: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

double toDouble(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace bincov
