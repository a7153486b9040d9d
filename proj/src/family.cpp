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

#include "bincov/family.hpp"

#include "bincov/errors.hpp"

namespace bincov {

std::string familyName(Family family) {
  switch (family) {
    case Family::kTradeoff1:
      return "tradeoff1";
    case Family::kTradeoff2:
      return "tradeoff2";
    case Family::kImpossibility:
      return "impossibility";
    case Family::kAntiRobust:
      return "anti-robust";
    case Family::kStochastic:
      return "stochastic";
  }
  return "stochastic";
}

Family parseFamily(std::string_view name) {
  if (name == "tradeoff1") return Family::kTradeoff1;
  if (name == "tradeoff2") return Family::kTradeoff2;
  if (name == "impossibility") return Family::kImpossibility;
  if (name == "anti-robust" || name == "antiRobust") return Family::kAntiRobust;
  if (name == "stochastic") return Family::kStochastic;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

}  // namespace bincov
