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

#include "support/corpus.h"

#include <algorithm>

namespace dyncong::testing {

namespace {

EdgeSpec Affine(std::string from, std::string to, Natural slope, Natural intercept) {
  return EdgeSpec{std::move(from), std::move(to), CostFunction::Affine(slope, intercept)};
}

EdgeSpec Cost(std::string from, std::string to, CostFunction f) {
  return EdgeSpec{std::move(from), std::move(to), std::move(f)};
}

}  // namespace

Arena LoadArena(const std::string& file) {
  return LoadArenaFile(std::string(DYNCONG_DATA_DIR) + "/" + file);
}

Arena Fig1() { return LoadArena("fig1.json"); }
Arena Fig5() { return LoadArena("fig5.json"); }

EdgeId EdgeOf(const Arena& arena, const std::string& from, const std::string& to) {
  auto e = arena.FindEdge(arena.state_id(from), arena.state_id(to));
  if (!e) throw InputError("no edge " + from + "->" + to);
  return *e;
}

BlindStrategy PathOf(const Arena& arena, const std::vector<std::string>& states) {
  BlindStrategy s;
  for (std::size_t k = 1; k < states.size(); ++k) {
    s.edges.push_back(EdgeOf(arena, states[k - 1], states[k]));
  }
  return s;
}

Configuration ConfigOf(const Arena& arena, const std::vector<std::string>& names) {
  Configuration c;
  for (const std::string& n : names) c.push_back(arena.state_id(n));
  return c;
}

std::vector<MoveVector> MovesOf(const Arena& arena,
                                const std::vector<std::vector<std::string>>& routes) {
  std::size_t len = 0;
  for (const auto& r : routes) len = std::max(len, r.size() - 1);
  std::vector<MoveVector> moves(len, MoveVector(routes.size()));
  for (std::size_t i = 0; i < routes.size(); ++i) {
    BlindStrategy s = PathOf(arena, routes[i]);
    for (std::size_t k = 0; k < len; ++k) moves[k][i] = EdgeAtStep(arena, s, k);
  }
  return moves;
}

std::vector<CorpusGame> Corpus() {
  std::vector<CorpusGame> corpus;
  auto add = [&](std::string name, std::vector<std::string> states, std::vector<EdgeSpec> edges,
                 std::size_t players) {
    corpus.push_back(
        CorpusGame{std::move(name), Arena::Create(std::move(states), "s", "t", edges), players});
  };
  const std::vector<PieceSpec> convex{{1, 1, 0}, {3, 3, 0}};

  add("single-edge", {"s", "t"}, {Affine("s", "t", 1, 0)}, 2);
  add("two-routes", {"s", "a", "b", "t"},
      {Affine("s", "a", 1, 0), Affine("s", "b", 0, 2), Affine("a", "t", 0, 1),
       Affine("b", "t", 1, 0)},
      2);
  corpus.push_back(CorpusGame{"fig1-n1", Fig1(), 1});
  corpus.push_back(CorpusGame{"fig1-n2", Fig1(), 2});
  corpus.push_back(CorpusGame{"fig1-n3", Fig1(), 3});
  add("diamond-cross", {"s", "a", "b", "t"},
      {Affine("s", "a", 2, 0), Affine("s", "b", 1, 1), Affine("a", "b", 0, 1),
       Affine("a", "t", 1, 0), Affine("b", "t", 2, 0)},
      3);
  add("chain-shortcut", {"s", "a", "b", "t"},
      {Affine("s", "a", 0, 1), Affine("a", "b", 0, 1), Affine("b", "t", 1, 0),
       Affine("s", "b", 0, 3)},
      2);
  add("cycle", {"s", "a", "t"},
      {Affine("s", "a", 1, 0), Affine("a", "s", 0, 1), Affine("a", "t", 2, 0),
       Affine("s", "t", 0, 3)},
      2);
  add("threshold", {"s", "a", "b", "t"},
      {Cost("s", "a", CostFunction::Threshold(1, 1, 5)), Affine("s", "b", 0, 3),
       Affine("a", "t", 0, 1), Affine("b", "t", 0, 1)},
      2);
  add("piecewise", {"s", "a", "t"},
      {Cost("s", "a", CostFunction::Create(convex)), Affine("a", "t", 0, 1),
       Affine("s", "t", 0, 4)},
      3);
  add("three-way", {"s", "a", "b", "c", "t"},
      {Affine("s", "a", 1, 0), Affine("s", "b", 1, 0), Affine("s", "c", 2, 0),
       Affine("a", "t", 0, 1), Affine("b", "t", 0, 1), Affine("c", "t", 0, 1)},
      3);
  add("long-detour", {"s", "a", "b", "c", "t"},
      {Affine("s", "a", 0, 1), Affine("a", "b", 0, 1), Affine("b", "c", 0, 1),
       Affine("c", "t", 1, 0), Affine("s", "c", 2, 0)},
      2);
  add("braess", {"s", "a", "b", "t"},
      {Affine("s", "a", 1, 0), Affine("s", "b", 0, 2), Affine("a", "b", 0, 1),
       Affine("a", "t", 0, 2), Affine("b", "t", 1, 0)},
      3);
  add("grid", {"s", "a", "b", "c", "d", "t"},
      {Affine("s", "a", 1, 0), Affine("s", "b", 0, 2), Affine("a", "c", 1, 1),
       Affine("b", "c", 0, 1), Affine("b", "d", 2, 0), Affine("c", "t", 1, 0),
       Affine("d", "t", 0, 1)},
      2);
  add("punish-cycle", {"s", "a", "b", "t"},
      {Affine("s", "a", 2, 0), Affine("a", "b", 1, 0), Affine("b", "a", 0, 1),
       Affine("b", "t", 1, 0), Affine("a", "t", 3, 0)},
      2);
  add("waiting-room", {"s", "t"},
      {Affine("s", "s", 0, 1), Cost("s", "t", CostFunction::Threshold(1, 1, 4))}, 2);
  add("parallel-three", {"s", "a", "t"},
      {Affine("s", "a", 1, 0), Affine("s", "t", 2, 0), Affine("a", "t", 1, 0)}, 3);
  add("merge", {"s", "a", "b", "c", "t"},
      {Affine("s", "a", 0, 1), Affine("s", "b", 1, 0), Affine("a", "c", 1, 0),
       Affine("b", "c", 0, 1), Affine("c", "t", 1, 1), Affine("a", "t", 0, 4)},
      2);
  return corpus;
}

Arena RandomArena(std::mt19937& rng, std::size_t max_states) {
  std::uniform_int_distribution<std::size_t> size_dist(2, std::max<std::size_t>(2, max_states));
  const std::size_t k = size_dist(rng);
  std::vector<std::string> states;
  for (std::size_t i = 0; i + 1 < k; ++i) states.push_back("q" + std::to_string(i));
  states.push_back("t");
  std::uniform_int_distribution<Natural> slope(0, 2);
  std::uniform_int_distribution<Natural> intercept(1, 3);
  std::bernoulli_distribution coin(0.4);
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // Every state gets an edge to its successor; others appear at random.
      if (j == i + 1 || (j != i && coin(rng))) {
        edges.push_back(Affine(states[i], states[j], slope(rng), intercept(rng)));
      }
    }
  }
  return Arena::Create(states, states.front(), "t", edges);
}

BlindStrategy RandomStrategy(std::mt19937& rng, const Arena& arena) {
  const std::vector<std::size_t> hops = arena.HopsToTarget();
  BlindStrategy s;
  StateId at = arena.source();
  std::bernoulli_distribution wander(0.3);
  std::size_t budget = arena.num_states();
  while (at != arena.target()) {
    const auto& out = arena.out_edges(at);
    EdgeId chosen = out.front();
    if (budget > 0 && wander(rng)) {
      chosen = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
      --budget;
    } else {
      for (EdgeId e : out) {
        if (hops[arena.edge(e).to] + 1 == hops[at]) {
          chosen = e;
          break;
        }
      }
    }
    s.edges.push_back(chosen);
    at = arena.edge(chosen).to;
  }
  return s;
}

}  // namespace dyncong::testing
