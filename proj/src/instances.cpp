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

#include "coregauge/instances.hpp"

#include <random>

namespace coregauge {

namespace {

void require_odd_path(int n, const char* op) {
  if (n < 5 || n % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, std::string(op) + ": n must be odd and >= 5");
  }
}

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

GameInstance gen_path_uniform(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "gen_path_uniform: n must be >= 2");
  GameInstance inst;
  inst.kind = GameKind::Matching;
  inst.num_agents = n;
  for (int i = 0; i + 1 < n; ++i) {
    inst.edges.push_back({i, i, i + 1});
    inst.weights.push_back(1.0);
  }
  return inst;
}

std::pair<GameInstance, GameInstance> gen_example1_pair(int n) {
  require_odd_path(n, "gen_example1_pair");
  GameInstance base = gen_path_uniform(n);
  GameInstance other = base;
  other.weights.front() = 0.0;
  other.weights.back() = 0.0;
  return {std::move(base), std::move(other)};
}

std::pair<GameInstance, GameInstance> gen_theorem3_pair(int n, double delta) {
  require_odd_path(n, "gen_theorem3_pair");
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "gen_theorem3_pair: delta must be positive");
  GameInstance base = gen_path_uniform(n);
  GameInstance other = base;
  other.weights[1] = 1.0 + delta;
  return {std::move(base), std::move(other)};
}

GameInstance gen_random(GameKind kind, int n, double edge_prob, double w_max, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gen_random: n must be >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "gen_random: edge probability must lie in [0, 1]");
  }
  if (!(w_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "gen_random: w_max must be positive");

  std::mt19937_64 rng(seed);
  GameInstance inst;
  inst.kind = kind;
  inst.num_agents = n;
  const auto add_edge = [&](int u, int v) {
    const int id = static_cast<int>(inst.edges.size());
    inst.edges.push_back({id, u, v});
    inst.weights.push_back(w_max * (1.0 - unit_draw(rng)));
  };
  if (kind == GameKind::MinSpanningTree) {
    for (int v = 0; v < n; ++v) add_edge(kRootVertex, v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit_draw(rng) < edge_prob) add_edge(u, v);
    }
  }
  require_valid(inst);
  return inst;
}

std::vector<GameInstance> generate(const InstanceSpec& spec) {
  if (spec.generator == "path") return {gen_path_uniform(spec.n)};
  if (spec.generator == "example1") {
    auto [a, b] = gen_example1_pair(spec.n);
    return {std::move(a), std::move(b)};
  }
  if (spec.generator == "theorem3") {
    auto [a, b] = gen_theorem3_pair(spec.n, spec.delta);
    return {std::move(a), std::move(b)};
  }
  if (spec.generator == "random") {
    return {gen_random(spec.kind, spec.n, spec.edge_prob, spec.w_max, spec.seed)};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator \"" + spec.generator + "\"");
}

}  // namespace coregauge
