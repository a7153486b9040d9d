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

#include "bincov/json_io.hpp"

namespace bincov {
namespace {

Json stringsOf(const std::vector<std::string>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v);
  return out;
}

std::vector<Rational> rationalsOf(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const Json& v : j) {
    if (v.is_string()) {
      out.push_back(parseRational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.emplace_back(v.get<std::int64_t>());
    } else {
      throw InvalidArgument(std::string(what) + " entries must be strings such as \"1/3\"");
    }
  }
  return out;
}

Json ratioJson(std::int64_t profit, std::optional<std::int64_t> opt) {
  if (!opt || *opt == 0) return nullptr;
  return toDecimal(Rational(profit, *opt), 6);
}

Json rowJson(const TrialRow& r) {
  Json j;
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["n"] = r.n;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  j["profit"] = r.profit;
  j["opt"] = r.opt ? Json(*r.opt) : Json(nullptr);
  j["ratio"] = r.ratio ? Json(toDecimal(*r.ratio, 6)) : Json(nullptr);
  j["g"] = r.g;
  j["extraBins"] = r.extraBins;
  return j;
}

}  // namespace

Json instanceToJson(const Instance& sigma) {
  Json j;
  const std::vector<std::string> names = sigma.sizes().toStrings();
  j["sizes"] = stringsOf(names);
  Json items = Json::array();
  for (SizeIndex i : sigma.items()) items.push_back(names[i]);
  j["items"] = std::move(items);
  return j;
}

Json instanceToJson(const GeneratedInstance& generated) {
  Json j = instanceToJson(generated.sigma);
  j["family"] = familyName(generated.family);
  if (generated.knownOpt) j["knownOpt"] = *generated.knownOpt;
  if (generated.prediction) j["prediction"] = stringsOf(generated.prediction->toStrings());
  return j;
}

InstanceFile instanceFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("sizes") || !j.contains("items")) {
    throw InvalidArgument("instance JSON needs \"sizes\" and \"items\"");
  }
  SizeSet sizes(rationalsOf(j.at("sizes"), "sizes"));
  std::vector<SizeIndex> items;
  for (const Rational& v : rationalsOf(j.at("items"), "items")) {
    const auto idx = sizes.indexOf(v);
    if (!idx) throw InvalidArgument("item size " + formatRational(v) + " is not in the size set");
    items.push_back(*idx);
  }
  InstanceFile file{Instance(sizes, std::move(items)), std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("family")) file.family = j.at("family").get<std::string>();
  if (j.contains("knownOpt")) file.knownOpt = j.at("knownOpt").get<std::int64_t>();
  if (j.contains("prediction")) file.prediction = FrequencyVector(rationalsOf(j.at("prediction"), "prediction"));
  return file;
}

Json coveringToJson(const Covering& covering) {
  const std::vector<std::string> names = covering.sizes().toStrings();
  Json bins = Json::array();
  for (std::size_t b = 0; b < covering.binCount(); ++b) {
    const BinView bin = covering.bin(b);
    Json jb;
    jb["owner"] = ownerLabel(bin.owner());
    if (bin.owner().kind == OwnerKind::kGroup) {
      jb["group"] = bin.owner().group;
      jb["layoutBin"] = bin.owner().bin;
    }
    Json slots = Json::array();
    for (const Slot& s : bin.slots()) {
      Json js;
      js["size"] = names[s.size];
      js["item"] = s.filled() ? Json(s.item) : Json(nullptr);
      slots.push_back(std::move(js));
    }
    jb["slots"] = std::move(slots);
    jb["level"] = formatRational(bin.level());
    jb["covered"] = bin.covered();
    bins.push_back(std::move(jb));
  }
  Json j;
  j["sizes"] = stringsOf(names);
  j["bins"] = std::move(bins);
  j["profit"] = covering.profit();
  return j;
}

Json catalogToJson(const BinTypeCatalog& catalog) {
  const std::vector<std::string> names = catalog.sizes().toStrings();
  Json types = Json::array();
  for (const BinType& t : catalog.types()) {
    Json tuple = Json::array();
    for (SizeIndex i : t.tuple) tuple.push_back(names[i]);
    types.push_back({{"tuple", std::move(tuple)},
                     {"total", formatRational(catalog.total(t))},
                     {"covered", t.covered}});
  }
  Json j;
  j["sizes"] = stringsOf(names);
  j["tau"] = catalog.tauS();
  j["tauMax"] = catalog.tauSmax();
  j["types"] = std::move(types);
  return j;
}

Json runRecordToJson(const RunRecord& record, std::optional<std::int64_t> opt,
                     std::optional<std::uint64_t> seed) {
  Json params = Json::object();
  for (const auto& [key, value] : record.params) params[key] = value;
  Json j;
  j["alg"] = record.alg;
  j["params"] = std::move(params);
  j["profit"] = record.profit;
  j["opt"] = opt ? Json(*opt) : Json(nullptr);
  j["ratio"] = ratioJson(record.profit, opt);
  j["g"] = record.g;
  j["extraBins"] = record.extraBins;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

Json reportToJson(const RatioReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["alg"] = report.alg;
  j["family"] = report.family;
  j["k"] = report.k;
  j["eps"] = report.epsilon ? Json(formatRational(*report.epsilon)) : Json(nullptr);
  j["lambda"] = report.lambda ? Json(report.lambda->toString()) : Json(nullptr);
  j["delta"] = report.delta ? Json(formatRational(*report.delta)) : Json(nullptr);
  Json rows = Json::array();
  for (const TrialRow& r : report.rows) rows.push_back(rowJson(r));
  j["rows"] = std::move(rows);
  const auto minimum = report.minRatio();
  const auto mean = report.meanRatio();
  const auto median = report.quantile(Rational(1, 2));
  j["summary"] = {{"min", minimum ? Json(toDecimal(*minimum, 6)) : Json(nullptr)},
                  {"mean", mean ? Json(toDecimal(*mean, 6)) : Json(nullptr)},
                  {"median", median ? Json(toDecimal(*median, 6)) : Json(nullptr)}};
  return j;
}

Json sweepToJson(const SweepReport& report) {
  Json rows = Json::array();
  for (const SweepRow& r : report.rows) {
    Json cases = Json::array();
    for (const SweepCaseResult& c : r.cases) {
      cases.push_back({{"label", c.label},
                       {"perfect", c.perfect},
                       {"profit", c.profit},
                       {"opt", c.opt},
                       {"ratio", toDecimal(c.ratio, 6)},
                       {"consistencyOk", c.consistencyOk},
                       {"robustnessOk", c.robustnessOk}});
    }
    rows.push_back({{"lambda", r.lambda.toString()},
                    {"b", formatRational(r.b)},
                    {"consistency", toDecimal(r.consistency, 6)},
                    {"consistencyLine", formatRational(r.consistencyLine)},
                    {"consistencyOk", r.consistencyOk},
                    {"robustness", toDecimal(r.robustness, 6)},
                    {"robustnessLine", formatRational(r.robustnessLine)},
                    {"robustnessOk", r.robustnessOk},
                    {"cases", std::move(cases)}});
  }
  Json j;
  j["schema"] = kSweepSchema;
  j["eps"] = formatRational(report.epsilon);
  j["rows"] = std::move(rows);
  return j;
}

Json earToJson(const EarEstimate& estimate, const std::string& alg) {
  Json rows = Json::array();
  for (const TrialRow& r : estimate.rows) rows.push_back(rowJson(r));
  Json j;
  j["alg"] = alg;
  j["mean"] = estimate.used > 0 ? Json(toDecimal(estimate.mean, 6)) : Json(nullptr);
  j["standardError"] = toDecimal(Rational(estimate.standardError), 6);
  j["used"] = estimate.used;
  j["excluded"] = estimate.excluded;
  j["note"] = "finite-n estimate at a single fixed n; the limit inferior itself is not computed";
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace bincov
