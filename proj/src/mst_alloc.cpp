// Copyright 2026 The coregauge Authors
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

#include "coregauge/mst_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "coregauge/oracles.hpp"
#include "coregauge/union_find.hpp"

namespace coregauge {

namespace {

std::size_t node_of(int vertex, int n) {
  return vertex == kRootVertex ? static_cast<std::size_t>(n) : static_cast<std::size_t>(vertex);
}

bool same_level(double a, double b) {
  return std::abs(a - b) <= kBreakpointTolerance * std::max(1.0, std::abs(a));
}

}  // namespace

AuxiliaryTree::AuxiliaryTree(int num_agents, std::vector<Node> nodes)
    : num_agents_(num_agents), nodes_(std::move(nodes)) {}

RoundedWeights round_weights_mst(std::span<const double> w, double offset) {
  return round_weights(w, offset, 2.0);
}

AuxiliaryTree auxiliary_tree(const GameInstance& inst, std::span<const double> rounded) {
  require_kind(inst, GameKind::MinSpanningTree, "auxiliary_tree");
  require_weights(inst, rounded);
  const int n = inst.num_agents;
  const std::size_t num_vertices = static_cast<std::size_t>(n) + 1;

  std::vector<AuxiliaryTree::Node> nodes(num_vertices);
  for (int v = 0; v < n; ++v) {
    nodes[static_cast<std::size_t>(v)].leaf = v;
    nodes[static_cast<std::size_t>(v)].leaf_count = 1;
  }
  nodes[static_cast<std::size_t>(n)].leaf = kRootVertex;
  nodes[static_cast<std::size_t>(n)].leaf_count = 1;
  nodes[static_cast<std::size_t>(n)].contains_root = true;

  UnionFind components(num_vertices);
  std::vector<int> component_node(num_vertices);
  std::iota(component_node.begin(), component_node.end(), 0);

  std::vector<int> order(inst.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return rounded[static_cast<std::size_t>(a)] < rounded[static_cast<std::size_t>(b)];
  });

  std::size_t pos = 0;
  while (pos < order.size()) {
    const double level = rounded[static_cast<std::size_t>(order[pos])];
    std::size_t end = pos;
    while (end < order.size() && same_level(rounded[static_cast<std::size_t>(order[end])], level)) ++end;

    // Components of the forest before this level, joined by this level's edges.
    std::map<std::size_t, std::size_t> local_index;
    std::vector<std::size_t> reps;
    std::vector<std::pair<std::size_t, std::size_t>> joins;
    for (std::size_t k = pos; k < end; ++k) {
      const Edge& e = inst.edges[static_cast<std::size_t>(order[k])];
      const std::size_t a = components.find(node_of(e.u, n));
      const std::size_t b = components.find(node_of(e.v, n));
      if (a == b) continue;
      for (std::size_t c : {a, b}) {
        if (local_index.emplace(c, reps.size()).second) reps.push_back(c);
      }
      joins.emplace_back(local_index[a], local_index[b]);
    }
    UnionFind local(reps.size());
    for (auto [a, b] : joins) local.unite(a, b);

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < reps.size(); ++i) groups[local.find(i)].push_back(i);
    for (const auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      AuxiliaryTree::Node merged;
      merged.height = level;
      const int id = static_cast<int>(nodes.size());
      for (std::size_t m : members) {
        const int child = component_node[reps[m]];
        merged.children.push_back(child);
        merged.leaf_count += nodes[static_cast<std::size_t>(child)].leaf_count;
        merged.contains_root = merged.contains_root || nodes[static_cast<std::size_t>(child)].contains_root;
        nodes[static_cast<std::size_t>(child)].parent = id;
      }
      std::sort(merged.children.begin(), merged.children.end());
      for (std::size_t m = 1; m < members.size(); ++m) components.unite(reps[members[0]], reps[members[m]]);
      component_node[components.find(reps[members[0]])] = id;
      nodes.push_back(std::move(merged));
    }
    pos = end;
  }

  if (nodes.back().leaf_count != n + 1) {
    throw Error(ErrorCode::InvalidArgument, "auxiliary_tree: graph is not connected");
  }
  return AuxiliaryTree(n, std::move(nodes));
}

Allocation tree_allocation(const AuxiliaryTree& tree) {
  const auto& nodes = tree.nodes();
  // Accumulated share pushed down from the ancestors; parents precede children
  // when iterating ids downward.
  std::vector<double> acc(nodes.size(), 0.0);
  for (int id = tree.top() - 1; id >= 0; --id) {
    const auto& node = nodes[static_cast<std::size_t>(id)];
    const auto& parent = nodes[static_cast<std::size_t>(node.parent)];
    double share = 0.0;
    if (!node.contains_root) share = parent.height / node.leaf_count;
    acc[static_cast<std::size_t>(id)] = acc[static_cast<std::size_t>(node.parent)] + share;
  }
  Allocation z(static_cast<std::size_t>(tree.num_agents()));
  for (int v = 0; v < tree.num_agents(); ++v) z[static_cast<std::size_t>(v)] = acc[static_cast<std::size_t>(v)];
  return z;
}

Allocation mst_allocate(const GameInstance& inst, std::span<const double> w, double offset) {
  require_kind(inst, GameKind::MinSpanningTree, "mst_allocate");
  require_weights(inst, w);
  const RoundedWeights rw = round_weights_mst(w, offset);
  return tree_allocation(auxiliary_tree(inst, rw.rounded));
}

double connector_sum(const AuxiliaryTree& tree, Coalition s) {
  const auto& nodes = tree.nodes();
  std::vector<int> marked(nodes.size(), 0);
  int total = 1;
  marked[static_cast<std::size_t>(tree.root_leaf())] = 1;
  for (int v = 0; v < tree.num_agents(); ++v) {
    if (contains(s, v)) {
      marked[static_cast<std::size_t>(v)] = 1;
      ++total;
    }
  }
  for (std::size_t id = 0; id + 1 < nodes.size(); ++id) {
    marked[static_cast<std::size_t>(nodes[id].parent)] += marked[id];
  }
  double sum = 0.0;
  for (std::size_t id = 0; id + 1 < nodes.size(); ++id) {
    const bool in_connector = marked[id] > 0 && marked[id] < total;
    if (in_connector && !nodes[id].contains_root) {
      sum += nodes[static_cast<std::size_t>(nodes[id].parent)].height - nodes[id].height;
    }
  }
  return sum;
}

BreakpointDecomposition breakpoints_mst(std::span<const double> w) { return breakpoints(w, 2.0); }

Allocation integrate_mst(const GameInstance& inst, std::span<const double> w) {
  require_kind(inst, GameKind::MinSpanningTree, "integrate_mst");
  require_weights(inst, w);
  const auto bp = breakpoints_mst(w);
  return integrate_piecewise(bp, 2.0, static_cast<std::size_t>(inst.num_agents),
                             [&](double b) { return mst_allocate(inst, w, b); });
}

Allocation normalize_cost(const Allocation& raw, double grand) { return scale_to_total(raw, grand); }

Allocation theorem2_allocate(const GameInstance& inst, std::span<const double> w) {
  require_kind(inst, GameKind::MinSpanningTree, "theorem2_allocate");
  const Allocation raw = integrate_mst(inst, w);
  const double grand = mst_weight(inst, w, full_coalition(inst.num_agents));
  return normalize_cost(raw, grand);
}

nlohmann::json tree_to_json(const AuxiliaryTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t id = 0; id < tree.nodes().size(); ++id) {
    const auto& node = tree.nodes()[id];
    nodes.push_back({{"id", static_cast<int>(id)},
                     {"h", node.height},
                     {"children", node.children},
                     {"leaf", node.leaf ? nlohmann::json(*node.leaf) : nlohmann::json(nullptr)}});
  }
  return {{"nodes", std::move(nodes)}};
}

}  // namespace coregauge
