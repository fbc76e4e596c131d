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

#ifndef DYNCONG_DIGRAPH_H_
#define DYNCONG_DIGRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace dyncong {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;

struct Arc {
  NodeId to = 0;
  ArcId id = 0;
};

// Explicit directed graph built during state-space exploration. Arc weights
// live outside the graph, indexed by ArcId, so one graph can be scored under
// several weightings.
class Digraph {
 public:
  NodeId AddNode();
  ArcId AddArc(NodeId from, NodeId to);

  std::size_t num_nodes() const { return out_.size(); }
  std::size_t num_arcs() const { return num_arcs_; }
  std::span<const Arc> out(NodeId u) const { return out_[u]; }

 private:
  std::vector<std::vector<Arc>> out_;
  std::size_t num_arcs_ = 0;
};

std::vector<char> ReachableFrom(const Digraph& g, NodeId source);
std::vector<char> CoReachable(const Digraph& g, std::span<const NodeId> targets);

// Component index per node (kNoComponent for nodes outside `alive`).
// Components are numbered in reverse topological order: arcs between
// distinct components always go from a higher to a lower index.
struct SccDecomposition {
  static constexpr std::uint32_t kNoComponent = UINT32_MAX;
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
};
SccDecomposition StronglyConnectedComponents(const Digraph& g, std::span<const char> alive);

enum class Extremum { kMin, kMax };

struct ExtremalPathResult {
  bool found = false;
  // Only for kMax: some cycle on a source-to-target path has positive weight.
  bool unbounded = false;
  std::int64_t value = 0;
  // Node sequence from source to a target; empty unless found and bounded.
  std::vector<NodeId> path;
};

// Optimal weight of a path from `source` to any node in `targets`, over the
// subgraph of nodes that are reachable from the source and can reach a
// target. For kMin every cycle of that subgraph must carry weight zero
// (InternalError otherwise); for kMax a cycle arc of positive weight makes
// the result unbounded. Among optimal paths the one with fewest arcs is
// returned, earlier arcs first on ties.
ExtremalPathResult ExtremalPath(const Digraph& g, NodeId source, std::span<const NodeId> targets,
                                std::span<const std::int64_t> arc_weight, Extremum extremum);

}  // namespace dyncong

#endif  // DYNCONG_DIGRAPH_H_
