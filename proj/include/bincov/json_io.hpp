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

// JSON encodings of instances, coverings, run records and reports.
//
// Instance: {"sizes": ["1/3", "2/3"], "items": ["2/3", "1/3", ...],
//            "family": "...", "knownOpt": N, "prediction": ["1/2", "1/2"]}
// The last three keys are optional.

#ifndef BINCOV_JSON_IO_HPP_
#define BINCOV_JSON_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "bincov/bintypes.hpp"
#include "bincov/core.hpp"
#include "bincov/generators.hpp"
#include "bincov/harness.hpp"
#include "bincov/onlinealgs.hpp"
#include "json.hpp"

namespace bincov {

using Json = nlohmann::ordered_json;

struct InstanceFile {
  Instance sigma;
  std::optional<std::string> family;
  std::optional<std::int64_t> knownOpt;
  std::optional<FrequencyVector> prediction;
};

Json instanceToJson(const GeneratedInstance& generated);
Json instanceToJson(const Instance& sigma);
InstanceFile instanceFromJson(const Json& j);

Json coveringToJson(const Covering& covering);
Json catalogToJson(const BinTypeCatalog& catalog);

Json runRecordToJson(const RunRecord& record, std::optional<std::int64_t> opt,
                     std::optional<std::uint64_t> seed);
Json reportToJson(const RatioReport& report);
Json sweepToJson(const SweepReport& report);
Json earToJson(const EarEstimate& estimate, const std::string& alg);

}  // namespace bincov

#endif  // BINCOV_JSON_IO_HPP_
