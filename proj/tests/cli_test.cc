// Copyright 2026 The Dyncong Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "dyncong/cli.h"
#include "dyncong/io.h"
#include "support/corpus.h"

namespace dyncong {
namespace {

using nlohmann::json;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
  json result() const { return json::parse(out); }
};

Invocation Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  args.insert(args.begin(), "dyncong");
  Invocation r;
  r.code = Run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Arena(const std::string& name) { return std::string(DYNCONG_DATA_DIR) + "/" + name; }

std::string WriteTemp(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("dyncong_cli_" + name);
  std::ofstream(path) << j.dump();
  return path.string();
}

TEST_CASE("social optimum") {
  Invocation r = Invoke({"so", "--arena", Arena("fig1.json"), "--players", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.result().at("command") == "so");
  CHECK(r.result().at("cost") == 22);
  CHECK(Invoke({"so", "--arena", Arena("fig1.json"), "--players", "2", "--bound", "22"}).code == kExitOk);
  CHECK(Invoke({"so", "--arena", Arena("fig1.json"), "--players", "2", "--bound", "21"}).code ==
        kExitUnsatisfied);
}

TEST_CASE("equilibrium queries") {
  Invocation best = Invoke({"ne", "--arena", Arena("fig5.json"), "--players", "3"});
  CHECK(best.code == kExitOk);
  CHECK(best.result().at("cost") == 36);
  Invocation tight = Invoke({"ne", "--arena", Arena("fig5.json"), "--players", "3", "--bound", "35"});
  CHECK(tight.code == kExitUnsatisfied);
  CHECK(tight.result().at("satisfied") == false);
  Invocation spe = Invoke({"spe", "--arena", Arena("fig1.json"), "--players", "2", "--exists"});
  CHECK(spe.code == kExitOk);
  CHECK(spe.result().at("exists") == true);
}

TEST_CASE("checking outcomes from files") {
  Game g(testing::Fig1(), 2);
  OutcomePath path = EvalPath(g, testing::MovesOf(g.arena(), {{"src", "v1", "v3", "tgt"},
                                                              {"src", "v1", "v2", "v3", "tgt"}}))
                         .path;
  const std::string file = WriteTemp("outcome.json", OutcomeToJson(g.arena(), path));
  Invocation ne = Invoke({"check-ne", "--arena", Arena("fig1.json"), "--players", "2", "--outcome", file});
  CHECK(ne.code == kExitOk);
  CHECK(ne.result().at("ne") == true);
  Invocation spe = Invoke({"check-spe", "--arena", Arena("fig1.json"), "--players", "2", "--outcome", file});
  CHECK(spe.code == kExitOk);
  CHECK(spe.result().at("spe") == true);

  OutcomePath both = EvalPath(g, testing::MovesOf(g.arena(), {{"src", "v1", "v3", "tgt"},
                                                              {"src", "v1", "v3", "tgt"}}))
                         .path;
  const std::string bad = WriteTemp("both.json", OutcomeToJson(g.arena(), both));
  CHECK(Invoke({"check-ne", "--arena", Arena("fig1.json"), "--players", "2", "--outcome", bad}).code ==
        kExitUnsatisfied);
}

TEST_CASE("blind dynamics and evaluation") {
  Invocation r = Invoke({"blind-ne", "--arena", Arena("fig1.json"), "--players", "2"});
  CHECK(r.code == kExitOk);
  const std::string file = WriteTemp("profile.json", json{{"profile", r.result().at("profile")}});
  Invocation e = Invoke({"eval", "--arena", Arena("fig1.json"), "--players", "2", "--profile", file});
  CHECK(e.code == kExitOk);
  CHECK(e.result().at("blind_ne") == true);
  CHECK(e.result().at("social") == r.result().at("social"));
}

TEST_CASE("prices") {
  Invocation poa = Invoke({"poa", "--arena", Arena("fig5.json"), "--players", "3"});
  CHECK(poa.code == kExitOk);
  CHECK(poa.result().at("social_optimum") == 36);
  Invocation pos = Invoke({"pos", "--arena", Arena("fig5.json"), "--players", "3"});
  CHECK(pos.result().at("ratio") == "1/1");
}

TEST_CASE("oracle commands") {
  Invocation so = Invoke({"oracle", "so", "--arena", Arena("fig1.json"), "--players", "1"});
  CHECK(so.code == kExitOk);
  CHECK(so.result().at("cost") == 8);
  Invocation part = Invoke({"oracle", "partition", "--family", "1,1"});
  CHECK(part.result().at("players") == 6);
  CHECK(part.result().at("big_cost") == 39);
  CHECK(Invoke({"oracle", "partition", "--family", "1,2"}).code == kExitInputError);
}

TEST_CASE("input errors") {
  CHECK(Invoke({"so", "--arena", "/nonexistent.json", "--players", "2"}).code == kExitInputError);
  CHECK(Invoke({"so", "--arena", Arena("fig1.json"), "--players", "0"}).code == kExitInputError);
  CHECK(Invoke({"so", "--players", "2"}).code == kExitInputError);
  CHECK(Invoke({"frobnicate"}).code == kExitInputError);
  Invocation gamma = Invoke({"ne", "--arena", Arena("fig1.json"), "--players", "2", "--gamma", "1"});
  CHECK(gamma.code == kExitInputError);
  CHECK_FALSE(gamma.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"spe", "--arena", Arena("fig1.json"), "--players", "2"};
  CHECK(Invoke(args).out == Invoke(args).out);
}

}  // namespace
}  // namespace dyncong
