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

#include "dyncong/cli.h"

#include <chrono>
#include <fstream>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyncong/arena.h"
#include "dyncong/dynamics.h"
#include "dyncong/io.h"
#include "dyncong/metrics.h"
#include "dyncong/nash.h"
#include "dyncong/oracle.h"
#include "dyncong/social_optimum.h"
#include "dyncong/spe.h"

namespace dyncong {

using nlohmann::json;

namespace {

struct Options {
  std::string arena_path;
  std::size_t players = 0;
  std::optional<std::int64_t> bound;
  std::vector<std::int64_t> gamma;
  bool best = false;
  bool worst = false;
  bool exists = false;
  std::string dump_lambda;
  std::string profile_path;
  std::string outcome_path;
  std::string format = "json";
  bool timing = false;
  // Oracle parameters.
  std::optional<std::size_t> max_steps;
  std::optional<std::size_t> horizon;
  std::size_t player = 1;
  std::vector<Natural> family;
};

Game LoadGame(const Options& o) {
  if (o.players == 0) throw InputError("--players must be at least 1");
  return Game(LoadArenaFile(o.arena_path), o.players);
}

std::vector<std::int64_t> Gamma(const Options& o, std::size_t n) {
  if (static_cast<int>(o.best) + static_cast<int>(o.worst) + static_cast<int>(!o.gamma.empty()) > 1) {
    throw InputError("use only one of --gamma, --best, --worst");
  }
  if (o.worst) return std::vector<std::int64_t>(n, -1);
  if (o.gamma.empty()) return std::vector<std::int64_t>(n, 1);
  if (o.gamma.size() != n) throw InputError("--gamma needs one weight per player");
  return o.gamma;
}

json Costs(const std::vector<ExtNat>& costs) {
  json out = json::array();
  for (const ExtNat& c : costs) out.push_back(ExtNatToJson(c));
  return out;
}

// Every emitted witness must replay under the arena.
json Witness(const Game& game, const OutcomePath& path) {
  EvalOutcome(game, path);
  return OutcomeToJson(game.arena(), path);
}

int Validate(const Options& o, json& result) {
  Arena arena = LoadArenaFile(o.arena_path);
  result["valid"] = true;
  result["states"] = arena.num_states();
  result["edges"] = arena.num_edges();
  return kExitOk;
}

int So(const Options& o, json& result) {
  Game game = LoadGame(o);
  std::optional<SocialOptimum> so;
  if (o.bound) {
    if (*o.bound >= 0) so = ConstrainedSocialOptimum(game, static_cast<Natural>(*o.bound));
    result["satisfied"] = so.has_value();
    if (!so) return kExitUnsatisfied;
  } else {
    so = ComputeSocialOptimum(game);
  }
  result["cost"] = so->cost;
  result["witness"] = Witness(game, so->witness);
  return kExitOk;
}

int BlindNe(const Options& o, json& result) {
  Game game = LoadGame(o);
  BlindNeResult ne = ComputeBlindNe(game);
  PathEvaluation eval = EvalBlindProfile(game, ne.profile);
  result["profile"] = ProfileToJson(game.arena(), ne.profile);
  result["costs"] = Costs(eval.costs);
  result["social"] = ExtNatToJson(eval.social);
  result["potential"] = Potential(game, ne.profile);
  result["improvements"] = ne.improvements;
  return kExitOk;
}

int Eval(const Options& o, json& result) {
  Game game = LoadGame(o);
  if (o.profile_path.empty() == o.outcome_path.empty()) {
    throw InputError("eval needs exactly one of --profile and --outcome");
  }
  if (!o.profile_path.empty()) {
    BlindProfile profile = ProfileFromJson(game, ReadJsonFile(o.profile_path));
    PathEvaluation eval = EvalBlindProfile(game, profile);
    result["costs"] = Costs(eval.costs);
    result["social"] = ExtNatToJson(eval.social);
    result["potential"] = Potential(game, profile);
    result["blind_ne"] = IsBlindNe(game, profile);
    result["witness"] = OutcomeToJson(game.arena(), eval.path);
  } else {
    OutcomePath path = OutcomeFromJson(game, ReadJsonFile(o.outcome_path));
    PathEvaluation eval = EvalOutcome(game, path);
    result["costs"] = Costs(eval.costs);
    result["social"] = ExtNatToJson(eval.social);
  }
  return kExitOk;
}

int Values(const Options& o, json& result) {
  Game game = LoadGame(o);
  const Arena& arena = game.arena();
  ValueTable values = ValueTable::Compute(game);
  json table = json::array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    const ValueState& s = values.state(k);
    json others = json::object();
    for (StateId v = 0; v < arena.num_states(); ++v) {
      if (s.others[v] > 0) others[arena.state_name(v)] = s.others[v];
    }
    table.push_back({{"state", arena.state_name(s.my_state)}, {"others", others},
                     {"value", values.value(k)}});
  }
  result["values"] = table;
  result["iterations"] = values.iterations();
  return kExitOk;
}

int Ne(const Options& o, json& result) {
  Game game = LoadGame(o);
  ValueTable values = ValueTable::Compute(game);
  GammaNe ne = GammaMinNe(game, values, Gamma(o, game.num_players()));
  if (!CheckNeOutcome(game, values, ne.witness)) {
    throw InternalError("NE witness fails its own check");
  }
  result["cost"] = ne.cost;
  result["witness"] = Witness(game, ne.witness);
  if (o.bound) {
    result["satisfied"] = ne.cost <= *o.bound;
    if (ne.cost > *o.bound) return kExitUnsatisfied;
  }
  return kExitOk;
}

int CheckNe(const Options& o, json& result) {
  Game game = LoadGame(o);
  OutcomePath path = OutcomeFromJson(game, ReadJsonFile(o.outcome_path));
  bool ok = CheckNeOutcome(game, ValueTable::Compute(game), path);
  result["ne"] = ok;
  return ok ? kExitOk : kExitUnsatisfied;
}

int Spe(const Options& o, json& result) {
  Game game = LoadGame(o);
  ConfigGraph graph = ConfigGraph::Build(game);
  LambdaResult lambda = ComputeLambda(game, graph);
  if (!o.dump_lambda.empty()) {
    std::ofstream dump(o.dump_lambda);
    if (!dump) throw InputError("cannot write " + o.dump_lambda);
    dump << LabelsToJson(game.arena(), graph, lambda.labels).dump(2) << "\n";
  }
  SpeQuery q = o.exists ? SpeExists(game, graph, lambda.labels)
                        : GammaMinSpe(game, graph, lambda.labels, Gamma(o, game.num_players()));
  result["exists"] = q.exists;
  if (!q.exists) return kExitUnsatisfied;
  if (!CheckSpeOutcome(game, graph, lambda.labels, *q.witness)) {
    throw InternalError("SPE witness fails its own check");
  }
  if (!o.exists) result["cost"] = q.cost;
  result["witness"] = Witness(game, *q.witness);
  if (o.bound && !o.exists) {
    result["satisfied"] = q.cost <= *o.bound;
    if (q.cost > *o.bound) return kExitUnsatisfied;
  }
  return kExitOk;
}

int CheckSpe(const Options& o, json& result) {
  Game game = LoadGame(o);
  OutcomePath path = OutcomeFromJson(game, ReadJsonFile(o.outcome_path));
  ConfigGraph graph = ConfigGraph::Build(game);
  bool ok = CheckSpeOutcome(game, graph, ComputeLambda(game, graph).labels, path);
  result["spe"] = ok;
  return ok ? kExitOk : kExitUnsatisfied;
}

int Price(const Options& o, json& result, bool anarchy) {
  Game game = LoadGame(o);
  Prices p = ComputePrices(game, ValueTable::Compute(game));
  const Ratio& r = anarchy ? p.anarchy : p.stability;
  result["social_optimum"] = p.social_optimum;
  result[anarchy ? "worst_ne" : "best_ne"] = anarchy ? p.worst_ne : p.best_ne;
  result["ratio"] = r.ToString();
  if (r.is_infinite()) {
    result["decimal"] = "inf";
  } else {
    result["decimal"] = r.ToDouble();
  }
  return kExitOk;
}

int OracleSo(const Options& o, json& result) {
  Game game = LoadGame(o);
  std::size_t steps = o.max_steps.value_or(game.num_players() * game.arena().num_states());
  result["cost"] = ExtNatToJson(oracle::BruteSocialOptimum(game, steps));
  result["max_steps"] = steps;
  return kExitOk;
}

int OracleBr(const Options& o, json& result) {
  Game game = LoadGame(o);
  BlindProfile profile = ProfileFromJson(game, ReadJsonFile(o.profile_path));
  if (o.player == 0 || o.player > game.num_players()) throw InputError("--player out of range");
  std::vector<std::vector<EdgeId>> paths;
  for (const BlindStrategy& s : profile) paths.push_back(s.edges);
  std::size_t len = o.max_steps.value_or(ProfileLength(profile) + game.arena().num_states());
  result["cost"] = ExtNatToJson(oracle::BruteBestResponse(game, paths, o.player - 1, len));
  result["max_len"] = len;
  return kExitOk;
}

int OracleValues(const Options& o, json& result) {
  Game game = LoadGame(o);
  const Arena& arena = game.arena();
  std::size_t horizon = o.horizon.value_or(game.cost_ceiling());
  oracle::BruteValues brute(game, horizon);
  ValueTable table = ValueTable::Compute(game);
  json out = json::array();
  for (std::size_t k = 0; k < table.size(); ++k) {
    const ValueState& s = table.state(k);
    Configuration c{s.my_state};
    for (StateId v = 0; v < arena.num_states(); ++v) c.insert(c.end(), s.others[v], v);
    out.push_back({{"config", OutcomeToJson(arena, OutcomePath{c, {}})["start"]},
                   {"value", ExtNatToJson(brute.Value(c, 0))}});
  }
  result["horizon"] = horizon;
  result["values"] = out;
  return kExitOk;
}

int OracleNeOutcomes(const Options& o, json& result) {
  Game game = LoadGame(o);
  std::size_t steps = o.max_steps.value_or(6);
  json out = json::array();
  for (const OutcomePath& p : oracle::BruteNeOutcomes(game, steps)) {
    out.push_back(OutcomeToJson(game.arena(), p));
  }
  result["max_steps"] = steps;
  result["outcomes"] = out;
  return kExitOk;
}

int OraclePartition(const Options& o, json& result) {
  oracle::PartitionInstance inst = oracle::GenPartitionArena(o.family);
  result["arena"] = json::parse(SerializeArena(inst.arena));
  result["players"] = inst.num_players;
  result["half_sum"] = inst.half_sum;
  result["big_cost"] = inst.big_cost;
  return kExitOk;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Solver for dynamic network congestion games", "dyncong"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag("--timing", o.timing, "Report elapsed time in the output");

  auto arena_opt = [&](CLI::App* cmd) {
    cmd->add_option("--arena", o.arena_path, "Arena file (JSON)")->required();
  };
  auto game_opts = [&](CLI::App* cmd) {
    arena_opt(cmd);
    cmd->add_option("--players", o.players, "Number of players")->required();
  };
  auto gamma_opts = [&](CLI::App* cmd) {
    cmd->add_option("--gamma", o.gamma, "Comma-separated player weights")->delimiter(',');
    cmd->add_flag("--best", o.best, "All weights 1 (best equilibrium, the default)");
    cmd->add_flag("--worst", o.worst, "All weights -1 (worst equilibrium)");
  };
  const std::string bound_help =
      "Bound b; the query is satisfied when the optimal cost is at most b (<= b)";

  using Handler = std::function<int(const Options&, json&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    commands.emplace_back(cmd, std::move(h));
    return cmd;
  };

  arena_opt(add("validate", "Check an arena file", Validate));
  CLI::App* so = add("so", "Social optimum", So);
  game_opts(so);
  so->add_option("--bound", o.bound, bound_help);
  game_opts(add("blind-ne", "Blind Nash equilibrium by best-response dynamics", BlindNe));
  CLI::App* eval = add("eval", "Costs of a blind profile or an outcome", Eval);
  game_opts(eval);
  eval->add_option("--profile", o.profile_path, "Blind profile file");
  eval->add_option("--outcome", o.outcome_path, "Outcome file");
  game_opts(add("values", "Punishment values of every value state", Values));
  CLI::App* ne = add("ne", "Gamma-optimal Nash equilibrium", Ne);
  game_opts(ne);
  gamma_opts(ne);
  ne->add_option("--bound", o.bound, bound_help);
  CLI::App* check_ne = add("check-ne", "Is an outcome a Nash equilibrium outcome", CheckNe);
  game_opts(check_ne);
  check_ne->add_option("--outcome", o.outcome_path, "Outcome file")->required();
  CLI::App* spe = add("spe", "Subgame-perfect equilibria", Spe);
  game_opts(spe);
  gamma_opts(spe);
  spe->add_option("--bound", o.bound, bound_help);
  spe->add_flag("--exists", o.exists, "Only decide existence");
  spe->add_option("--dump-lambda", o.dump_lambda, "Write the label table to this file");
  CLI::App* check_spe = add("check-spe", "Is an outcome an SPE outcome", CheckSpe);
  game_opts(check_spe);
  check_spe->add_option("--outcome", o.outcome_path, "Outcome file")->required();
  game_opts(add("poa", "Price of anarchy",
                [](const Options& opt, json& r) { return Price(opt, r, true); }));
  game_opts(add("pos", "Price of stability",
                [](const Options& opt, json& r) { return Price(opt, r, false); }));

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference solvers");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->fallthrough();
  auto add_oracle = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* cmd = oracle_cmd->add_subcommand(name, help);
    cmd->fallthrough();
    commands.emplace_back(cmd, std::move(h));
    return cmd;
  };
  CLI::App* o_so = add_oracle("so", "Exhaustive social optimum", OracleSo);
  game_opts(o_so);
  o_so->add_option("--max-steps", o.max_steps, "Longest path considered (default n*|V|)");
  CLI::App* o_br = add_oracle("br", "Exhaustive best response", OracleBr);
  game_opts(o_br);
  o_br->add_option("--profile", o.profile_path, "Blind profile file")->required();
  o_br->add_option("--player", o.player, "Responding player (1-based)");
  o_br->add_option("--max-len", o.max_steps, "Longest response considered");
  CLI::App* o_values = add_oracle("values", "Horizon-bounded values", OracleValues);
  game_opts(o_values);
  o_values->add_option("--horizon", o.horizon, "Search horizon (default |V|*kappa)");
  CLI::App* o_ne = add_oracle("ne-outcomes", "Exhaustive NE outcomes", OracleNeOutcomes);
  game_opts(o_ne);
  o_ne->add_option("--max-steps", o.max_steps, "Longest outcome considered (default 6)");
  add_oracle("partition", "Partition gadget arena", OraclePartition)
      ->add_option("--family", o.family, "Comma-separated family")
      ->delimiter(',')
      ->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  for (auto& [cmd, handler] : commands) {
    if (!cmd->parsed()) continue;
    json result;
    result["command"] = cmd->get_name();
    int code = kExitOk;
    try {
      code = handler(o, result);
    } catch (const InputError& e) {
      err << "input error: " << e.what() << "\n";
      return kExitInputError;
    } catch (const BudgetExceeded& e) {
      err << "budget exceeded: " << e.what() << "\n";
      return kExitAborted;
    } catch (const OverflowError& e) {
      err << "overflow: " << e.what() << "\n";
      return kExitAborted;
    } catch (const InternalError& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitAborted;
    } catch (const std::domain_error& e) {
      err << "input error: " << e.what() << "\n";
      return kExitInputError;
    }
    if (o.timing) {
      result["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
    }
    out << (o.format == "pretty" ? result.dump(2) : result.dump()) << "\n";
    return code;
  }
  err << "error: no command given\n";
  return kExitInputError;
}

}  // namespace dyncong
