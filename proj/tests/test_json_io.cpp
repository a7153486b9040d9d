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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bincov/json_io.hpp"

using namespace bincov;

TEST_CASE("instance round trip") {
  const GeneratedInstance g = genImpossibility(4, 5, 2);
  const Json j = instanceToJson(g);
  CHECK(j["family"] == "impossibility");
  CHECK(j["knownOpt"] == 2);
  const InstanceFile back = instanceFromJson(Json::parse(j.dump()));
  CHECK(back.sigma == g.sigma);
  CHECK(back.knownOpt == 2);
  CHECK(back.family == "impossibility");

  const TradeoffPair p = genTradeoffPair(3, 2);
  const InstanceFile withPred = instanceFromJson(instanceToJson(p.first));
  CHECK(withPred.prediction == p.prediction);
}

TEST_CASE("malformed instances") {
  CHECK_THROWS_AS(instanceFromJson(Json::parse(R"({"sizes":["1/2"]})")), InvalidArgument);
  CHECK_THROWS_AS(instanceFromJson(Json::parse(R"({"sizes":["1/2"],"items":["1/3"]})")), InvalidArgument);
  CHECK_THROWS_AS(instanceFromJson(Json::parse(R"({"sizes":["1/2"],"items":[true]})")), InvalidArgument);
  const InstanceFile ok = instanceFromJson(Json::parse(R"({"sizes":["0.5","1"],"items":["1/2","1"]})"));
  CHECK(ok.sigma.size() == 2);
}

TEST_CASE("covering and record encodings") {
  const SizeSet s = parseSizeSet("1/2,1");
  const RunRecord r = pcRun(Instance(s, {0, 1, 0}), FrequencyVector({Rational(1), Rational(0)}), Rational(1, 2));
  const Json c = coveringToJson(r.covering);
  CHECK(c["profit"] == 2);
  CHECK(c["bins"][0]["owner"] == "group");
  CHECK(c["bins"][0]["group"] == 1);
  CHECK(c["bins"].back()["owner"] == "extra");

  const Json rec = runRecordToJson(r, 2, 9);
  CHECK(rec["alg"] == "pc");
  CHECK(rec["ratio"] == "1.000000");
  CHECK(rec["seed"] == 9);
  CHECK(rec["params"]["m_eps"] == "48");
  CHECK(runRecordToJson(r, std::nullopt, std::nullopt)["ratio"].is_null());

  const Json cat = catalogToJson(enumerateBinTypes(parseSizeSet("1/3,2/3")));
  CHECK(cat["tau"] == 8);
  CHECK(cat["tauMax"] == 3);
}
