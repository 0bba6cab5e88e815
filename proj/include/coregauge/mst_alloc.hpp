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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coregauge/game.hpp"
#include "coregauge/rounding.hpp"
#include "json.hpp"

namespace coregauge {

/// Merge dendrogram of Kruskal's algorithm on a weight vector.
///
/// Node ids 0..n-1 are the agent leaves, node n is the leaf of r, and internal
/// nodes follow in creation order, so a parent always has a larger id than its
/// children. An internal node is created whenever adding all edges of weight
/// <= x joins two or more components; its height is x.
class AuxiliaryTree {
 public:
  struct Node {
    double height = 0.0;
    int parent = -1;
    std::vector<int> children;
    std::optional<int> leaf;  // vertex id (kRootVertex for r) when a leaf
    int leaf_count = 0;       // |X| of the subtree, r included
    bool contains_root = false;
  };

  AuxiliaryTree(int num_agents, std::vector<Node> nodes);

  int num_agents() const { return num_agents_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int top() const { return static_cast<int>(nodes_.size()) - 1; }
  int root_leaf() const { return num_agents_; }

 private:
  int num_agents_;
  std::vector<Node> nodes_;
};

/// Base-2 rounding.
RoundedWeights round_weights_mst(std::span<const double> w, double offset);

/// Groups equal weights (relative tolerance 1e-12) and sweeps them upward.
AuxiliaryTree auxiliary_tree(const GameInstance& inst, std::span<const double> rounded);

/// Cost sharing on a built tree: every tree edge (u, u') whose lower subtree
/// misses r splits h_u evenly over that subtree's leaves.
Allocation tree_allocation(const AuxiliaryTree& tree);

/// Raw allocation at a fixed offset b.
Allocation mst_allocate(const GameInstance& inst, std::span<const double> w, double offset);

/// Sum of h_u - h_u' over the edges (u, u') of the connector of S + r whose
/// lower subtree misses r.
double connector_sum(const AuxiliaryTree& tree, Coalition s);

BreakpointDecomposition breakpoints_mst(std::span<const double> w);

/// Closed form of the integral over b in [0, 1] of mst_allocate(b).
Allocation integrate_mst(const GameInstance& inst, std::span<const double> w);

Allocation normalize_cost(const Allocation& raw, double grand);

/// 4-approximate core allocation for the spanning tree game.
Allocation theorem2_allocate(const GameInstance& inst, std::span<const double> w);

/// Lipschitz constant of integrate_mst (10 / ln 2) and of theorem2_allocate.
inline double raw_mst_lipschitz_bound() { return 10.0 / 0.69314718055994530942; }
inline double theorem2_lipschitz_bound() { return 2.0 * raw_mst_lipschitz_bound() + 1.0; }

/// {"nodes":[{"id":int,"h":float,"children":[int],"leaf":int|null}]}
nlohmann::json tree_to_json(const AuxiliaryTree& tree);

}  // namespace coregauge
