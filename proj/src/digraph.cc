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

#include "dyncong/digraph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "dyncong/common.h"

namespace dyncong {

NodeId Digraph::AddNode() {
  out_.emplace_back();
  return static_cast<NodeId>(out_.size() - 1);
}

ArcId Digraph::AddArc(NodeId from, NodeId to) {
  ArcId id = static_cast<ArcId>(num_arcs_++);
  out_[from].push_back(Arc{to, id});
  return id;
}

std::vector<char> ReachableFrom(const Digraph& g, NodeId source) {
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeId> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (const Arc& a : g.out(u)) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

std::vector<char> CoReachable(const Digraph& g, std::span<const NodeId> targets) {
  std::vector<std::vector<NodeId>> in(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (const Arc& a : g.out(u)) in[a.to].push_back(u);
  }
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeId> stack;
  for (NodeId t : targets) {
    if (!seen[t]) {
      seen[t] = 1;
      stack.push_back(t);
    }
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : in[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

SccDecomposition StronglyConnectedComponents(const Digraph& g, std::span<const char> alive) {
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  const std::size_t n = g.num_nodes();
  SccDecomposition result;
  result.component.assign(n, SccDecomposition::kNoComponent);
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> scc_stack;
  // Explicit call stack: (node, next arc position).
  std::vector<std::pair<NodeId, std::size_t>> frames;
  std::uint32_t next_index = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (!alive[root] || index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      auto arcs = g.out(u);
      if (pos < arcs.size()) {
        NodeId v = arcs[pos++].to;
        if (!alive[v]) continue;
        if (index[v] == kUnvisited) {
          index[v] = low[v] = next_index++;
          scc_stack.push_back(v);
          on_stack[v] = 1;
          frames.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      NodeId done = u;
      frames.pop_back();
      if (!frames.empty()) {
        NodeId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        NodeId w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          result.component[w] = result.count;
        } while (w != done);
        ++result.count;
      }
    }
  }
  return result;
}

ExtremalPathResult ExtremalPath(const Digraph& g, NodeId source, std::span<const NodeId> targets,
                                std::span<const std::int64_t> arc_weight, Extremum extremum) {
  ExtremalPathResult result;
  const std::size_t n = g.num_nodes();
  std::vector<char> alive = ReachableFrom(g, source);
  std::vector<char> coreach = CoReachable(g, targets);
  for (std::size_t u = 0; u < n; ++u) alive[u] = alive[u] && coreach[u];
  if (!alive[source]) return result;
  result.found = true;

  SccDecomposition scc = StronglyConnectedComponents(g, alive);
  for (NodeId u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    for (const Arc& a : g.out(u)) {
      if (!alive[a.to] || scc.component[a.to] != scc.component[u]) continue;
      std::int64_t w = arc_weight[a.id];
      if (w == 0) continue;
      if (extremum == Extremum::kMax && w > 0) {
        result.unbounded = true;
        return result;
      }
      throw InternalError("cycle with non-zero weight " + std::to_string(w) +
                          " in an acyclic-by-construction search graph");
    }
  }

  // Every component is entered and left at the same accumulated weight, so
  // a per-component value suffices. Process components in topological order.
  constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> best(scc.count, kUnset);
  std::vector<std::vector<NodeId>> members(scc.count);
  for (NodeId u = 0; u < n; ++u) {
    if (alive[u]) members[scc.component[u]].push_back(u);
  }
  best[scc.component[source]] = 0;
  auto better = [&](std::int64_t a, std::int64_t b) {
    return extremum == Extremum::kMin ? a < b : a > b;
  };
  for (std::uint32_t comp = scc.count; comp-- > 0;) {
    if (best[comp] == kUnset) continue;
    for (NodeId u : members[comp]) {
      for (const Arc& a : g.out(u)) {
        if (!alive[a.to]) continue;
        std::uint32_t to = scc.component[a.to];
        if (to == comp) continue;
        std::int64_t cand = CheckedAdd(best[comp], arc_weight[a.id]);
        if (best[to] == kUnset || better(cand, best[to])) best[to] = cand;
      }
    }
  }

  NodeId goal = 0;
  bool have_goal = false;
  for (NodeId t : targets) {
    if (!alive[t]) continue;
    std::int64_t v = best[scc.component[t]];
    if (!have_goal || better(v, result.value)) {
      result.value = v;
      goal = t;
      have_goal = true;
    }
  }
  if (!have_goal) throw InternalError("coreachable source without a reachable target");

  // Breadth-first search along tight arcs yields an optimal path with the
  // fewest arcs.
  std::vector<NodeId> parent(n, UINT32_MAX);
  std::vector<char> seen(n, 0);
  std::deque<NodeId> queue{source};
  seen[source] = 1;
  while (!queue.empty() && !seen[goal]) {
    NodeId u = queue.front();
    queue.pop_front();
    std::int64_t du = best[scc.component[u]];
    for (const Arc& a : g.out(u)) {
      if (!alive[a.to] || seen[a.to]) continue;
      if (best[scc.component[a.to]] != du + arc_weight[a.id]) continue;
      seen[a.to] = 1;
      parent[a.to] = u;
      queue.push_back(a.to);
    }
  }
  if (!seen[goal]) throw InternalError("optimal path reconstruction failed");
  for (NodeId v = goal; v != source; v = parent[v]) result.path.push_back(v);
  result.path.push_back(source);
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace dyncong
