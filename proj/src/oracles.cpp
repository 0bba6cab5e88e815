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

#include "coregauge/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "coregauge/parallel.hpp"
#include "coregauge/union_find.hpp"

namespace coregauge {

namespace {

void require_coalition(const GameInstance& inst, Coalition s, const char* op) {
  if (inst.num_agents > kMaxCoalitionAgents) {
    throw Error(ErrorCode::Size, std::string(op) + ": at most 64 agents are supported");
  }
  if ((s & ~full_coalition(inst.num_agents)) != 0) {
    throw Error(ErrorCode::InvalidArgument, std::string(op) + ": coalition contains non-agents");
  }
}

// Edge list of the agent-only subgraph, as (u, v, weight) with both ends < 64.
struct AgentEdge {
  int u;
  int v;
  double w;
};

std::vector<std::vector<AgentEdge>> matching_adjacency(const GameInstance& inst,
                                                       std::span<const double> w) {
  std::vector<std::vector<AgentEdge>> adj(static_cast<std::size_t>(inst.num_agents));
  for (const Edge& e : inst.edges) {
    const double we = w[static_cast<std::size_t>(e.id)];
    adj[static_cast<std::size_t>(e.u)].push_back({e.u, e.v, we});
    adj[static_cast<std::size_t>(e.v)].push_back({e.v, e.u, we});
  }
  return adj;
}

class MatchingMemo {
 public:
  explicit MatchingMemo(std::vector<std::vector<AgentEdge>> adj) : adj_(std::move(adj)) {}

  double solve(Coalition s) {
    if (std::popcount(s) < 2) return 0.0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    const int v = std::countr_zero(s);
    const Coalition rest = s & ~(Coalition{1} << v);
    double best = solve(rest);
    for (const AgentEdge& e : adj_[static_cast<std::size_t>(v)]) {
      if (contains(rest, e.v)) {
        best = std::max(best, e.w + solve(rest & ~(Coalition{1} << e.v)));
      }
    }
    memo_.emplace(s, best);
    return best;
  }

 private:
  std::vector<std::vector<AgentEdge>> adj_;
  std::unordered_map<Coalition, double> memo_;
};

// Vertex index used by union-find: agents keep their id, r becomes n.
std::size_t node_of(int vertex, int n) {
  return vertex == kRootVertex ? static_cast<std::size_t>(n) : static_cast<std::size_t>(vertex);
}

std::vector<int> kruskal_order(const GameInstance& inst, std::span<const double> w) {
  std::vector<int> order(inst.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
  });
  return order;
}

double mst_weight_sorted(const GameInstance& inst, std::span<const double> w,
                         std::span<const int> order, Coalition s) {
  const int n = inst.num_agents;
  const auto in_subgraph = [&](int x) { return x == kRootVertex || contains(s, x); };
  UnionFind uf(static_cast<std::size_t>(n) + 1);
  int needed = std::popcount(s);
  double total = 0.0;
  for (int id : order) {
    if (needed == 0) break;
    const Edge& e = inst.edges[static_cast<std::size_t>(id)];
    if (!in_subgraph(e.u) || !in_subgraph(e.v)) continue;
    if (uf.unite(node_of(e.u, n), node_of(e.v, n))) {
      total += w[static_cast<std::size_t>(id)];
      --needed;
    }
  }
  if (needed != 0) {
    throw Error(ErrorCode::InvalidArgument, "mst_weight: G[S + r] is disconnected");
  }
  return total;
}

}  // namespace

double max_weight_matching(const GameInstance& inst, std::span<const double> w, Coalition s) {
  require_kind(inst, GameKind::Matching, "max_weight_matching");
  require_weights(inst, w);
  require_coalition(inst, s, "max_weight_matching");
  MatchingMemo memo(matching_adjacency(inst, w));
  return memo.solve(s);
}

double max_weight_matching(const GameInstance& inst, Coalition s) {
  return max_weight_matching(inst, inst.weights, s);
}

double mst_weight(const GameInstance& inst, std::span<const double> w, Coalition s) {
  require_kind(inst, GameKind::MinSpanningTree, "mst_weight");
  require_weights(inst, w);
  require_coalition(inst, s, "mst_weight");
  const auto order = kruskal_order(inst, w);
  return mst_weight_sorted(inst, w, order, s);
}

double mst_weight(const GameInstance& inst, Coalition s) { return mst_weight(inst, inst.weights, s); }

double char_value(const GameInstance& inst, std::span<const double> w, Coalition s) {
  if (s == 0) return 0.0;
  return inst.kind == GameKind::Matching ? max_weight_matching(inst, w, s) : mst_weight(inst, w, s);
}

double char_value(const GameInstance& inst, Coalition s) { return char_value(inst, inst.weights, s); }

CharTable char_table(const GameInstance& inst, std::span<const double> w) {
  require_weights(inst, w);
  const int n = inst.num_agents;
  if (n > kMaxTableAgents) {
    throw Error(ErrorCode::Size, "char_table: " + std::to_string(n) + " agents exceeds the limit of " +
                                     std::to_string(kMaxTableAgents));
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> values(count, 0.0);

  if (inst.kind == GameKind::Matching) {
    // nu(S) = max(nu(S - v), max_u w(v,u) + nu(S - v - u)) with v the lowest agent.
    const auto adj = matching_adjacency(inst, w);
    for (std::size_t s = 1; s < count; ++s) {
      const Coalition mask = s;
      const int v = std::countr_zero(mask);
      const Coalition rest = mask & ~(Coalition{1} << v);
      double best = values[rest];
      for (const AgentEdge& e : adj[static_cast<std::size_t>(v)]) {
        if (contains(rest, e.v)) {
          best = std::max(best, e.w + values[rest & ~(Coalition{1} << e.v)]);
        }
      }
      values[s] = best;
    }
  } else {
    const auto order = kruskal_order(inst, w);
    parallel_for(count - 1, [&](std::size_t i) {
      values[i + 1] = mst_weight_sorted(inst, w, order, static_cast<Coalition>(i + 1));
    });
  }
  return CharTable(inst.kind, n, std::move(values));
}

CharTable char_table(const GameInstance& inst) { return char_table(inst, inst.weights); }

bool marginal_monotonicity_check(const GameInstance& inst, std::span<const double> w, int edge_f,
                                 double delta, int agent_v, Coalition s) {
  require_kind(inst, GameKind::MinSpanningTree, "marginal_monotonicity_check");
  require_weights(inst, w);
  require_coalition(inst, s, "marginal_monotonicity_check");
  if (edge_f < 0 || static_cast<std::size_t>(edge_f) >= inst.edges.size()) {
    throw Error(ErrorCode::InvalidArgument, "marginal_monotonicity_check: unknown edge");
  }
  const Edge& f = inst.edges[static_cast<std::size_t>(edge_f)];
  const auto in_s = [&](int x) { return x == kRootVertex || contains(s, x); };
  if (!in_s(f.u) || !in_s(f.v)) {
    throw Error(ErrorCode::InvalidArgument,
                "marginal_monotonicity_check: both endpoints of f must lie in S + r");
  }
  if (agent_v < 0 || agent_v >= inst.num_agents || contains(s, agent_v)) {
    throw Error(ErrorCode::InvalidArgument, "marginal_monotonicity_check: v must be an agent outside S");
  }
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "marginal_monotonicity_check: delta must be positive");
  }
  const auto w2 = perturb(w, edge_f, delta);
  const Coalition with_v = s | (Coalition{1} << agent_v);
  const double lhs = mst_weight(inst, w2, with_v) - mst_weight(inst, w, with_v);
  const double rhs = mst_weight(inst, w2, s) - mst_weight(inst, w, s);
  return lhs <= rhs + 1e-9;
}

}  // namespace coregauge
