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

#include <span>
#include <vector>

#include "coregauge/game.hpp"

namespace coregauge {

/// Largest coalition table char_table will build.
inline constexpr int kMaxTableAgents = 20;

/// Maximum total weight of a matching in G[S]. Exact; memoized recursion over
/// vertex subsets.
double max_weight_matching(const GameInstance& inst, std::span<const double> w, Coalition s);
double max_weight_matching(const GameInstance& inst, Coalition s);

/// Minimum spanning tree weight of G[S + r] (Kruskal, ties by edge id).
double mst_weight(const GameInstance& inst, std::span<const double> w, Coalition s);
double mst_weight(const GameInstance& inst, Coalition s);

/// nu(S) for the instance's game kind; nu(empty) = 0.
double char_value(const GameInstance& inst, std::span<const double> w, Coalition s);
double char_value(const GameInstance& inst, Coalition s);

/// nu(S) for every S over the agent set.
class CharTable {
 public:
  CharTable(GameKind kind, int num_agents, std::vector<double> values)
      : kind_(kind), num_agents_(num_agents), values_(std::move(values)) {}

  GameKind kind() const { return kind_; }
  int num_agents() const { return num_agents_; }
  double operator()(Coalition s) const { return values_[static_cast<std::size_t>(s)]; }
  double grand() const { return values_.back(); }
  std::span<const double> values() const { return values_; }

 private:
  GameKind kind_;
  int num_agents_;
  std::vector<double> values_;
};

/// Throws Error(Size) for more than kMaxTableAgents agents.
CharTable char_table(const GameInstance& inst, std::span<const double> w);
CharTable char_table(const GameInstance& inst);

/// Executable form of the spanning-tree marginal inequality
///   OPT(S+v+r, w') - OPT(S+v+r, w) <= OPT(S+r, w') - OPT(S+r, w),
/// w' = w + delta * 1_f, for f inside S and v outside S. Returns whether it
/// holds within 1e-9.
bool marginal_monotonicity_check(const GameInstance& inst, std::span<const double> w, int edge_f,
                                 double delta, int agent_v, Coalition s);

}  // namespace coregauge
