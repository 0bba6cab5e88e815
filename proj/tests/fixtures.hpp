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
// Small hand-built instances shared by the unit tests.

#include <vector>

#include "coregauge/game.hpp"

namespace fixtures {

using coregauge::Edge;
using coregauge::GameInstance;
using coregauge::GameKind;
using coregauge::kRootVertex;

inline GameInstance matching(int n, const std::vector<Edge>& edges, const std::vector<double>& w) {
  GameInstance g;
  g.kind = GameKind::Matching;
  g.num_agents = n;
  g.edges = edges;
  g.weights = w;
  return g;
}

inline GameInstance mst(int n, const std::vector<Edge>& edges, const std::vector<double>& w) {
  GameInstance g = matching(n, edges, w);
  g.kind = GameKind::MinSpanningTree;
  return g;
}

// v0 - v1 - ... with the given weights.
inline GameInstance path(const std::vector<double>& w) {
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) edges.push_back({i, i, i + 1});
  return matching(static_cast<int>(w.size()) + 1, edges, w);
}

inline GameInstance triangle(double a, double b, double c) {
  return matching(3, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}}, {a, b, c});
}

inline GameInstance single_edge(double w) { return matching(2, {{0, 0, 1}}, {w}); }

// r, v0, v1 with w(r,v0)=1, w(r,v1)=4, w(v0,v1)=2.
inline GameInstance mst_three() {
  return mst(2, {{0, kRootVertex, 0}, {1, kRootVertex, 1}, {2, 0, 1}}, {1.0, 4.0, 2.0});
}

inline GameInstance mst_single(double c) { return mst(1, {{0, kRootVertex, 0}}, {c}); }

}  // namespace fixtures
