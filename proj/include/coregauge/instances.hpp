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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coregauge/game.hpp"

namespace coregauge {

/// Matching game on the path v0 - v1 - ... - v(n-1) with unit weights; edge i
/// joins v_i and v_{i+1}.
GameInstance gen_path_uniform(int n);

/// Unit path and its copy with the first and last edge set to 0. n odd, >= 5.
std::pair<GameInstance, GameInstance> gen_example1_pair(int n);

/// Unit path and its copy with the second edge raised to 1 + delta. n odd, >= 5.
std::pair<GameInstance, GameInstance> gen_theorem3_pair(int n, double delta);

/// Seeded Erdos-Renyi graph with weights uniform in (0, w_max]. Spanning tree
/// instances always get every root edge (r, v), listed first.
GameInstance gen_random(GameKind kind, int n, double edge_prob, double w_max, std::uint64_t seed);

/// Named generator invocation, as exposed by the CLI.
struct InstanceSpec {
  std::string generator;  // path | example1 | theorem3 | random
  GameKind kind = GameKind::Matching;
  int n = 5;
  double delta = 0.1;
  std::uint64_t seed = 0;
  double edge_prob = 0.5;
  double w_max = 10.0;
};

/// One instance for path/random, two (base, perturbed) for the pair generators.
std::vector<GameInstance> generate(const InstanceSpec& spec);

}  // namespace coregauge
