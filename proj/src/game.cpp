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

#include "coregauge/game.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <utility>

namespace coregauge {

const char* to_string(GameKind kind) noexcept {
  return kind == GameKind::Matching ? "matching" : "mst";
}

GameInstance GameInstance::with_weights(std::vector<double> w) const {
  GameInstance out = *this;
  out.weights = std::move(w);
  return out;
}

namespace {

std::string vertex_name(int v) {
  return v == kRootVertex ? std::string("r") : "v" + std::to_string(v);
}

}  // namespace

std::vector<Violation> validate_instance(const GameInstance& inst) {
  std::vector<Violation> out;
  const int n = inst.num_agents;
  if (n < 1) {
    out.push_back({"instance has no agents", std::nullopt, std::nullopt});
  }
  if (inst.weights.size() != inst.edges.size()) {
    out.push_back({"weight vector length " + std::to_string(inst.weights.size()) +
                       " does not match edge count " + std::to_string(inst.edges.size()),
                   std::nullopt, std::nullopt});
  }

  std::set<std::pair<int, int>> seen_pairs;
  std::vector<bool> root_adjacent(static_cast<std::size_t>(std::max(n, 0)), false);
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const Edge& e = inst.edges[i];
    if (e.id != static_cast<int>(i)) {
      out.push_back({"edge ids must be 0..|E|-1 in order; position " + std::to_string(i) +
                         " holds id " + std::to_string(e.id),
                     e.id, std::nullopt});
    }
    bool endpoints_ok = true;
    for (int x : {e.u, e.v}) {
      const bool root_ok = x == kRootVertex && inst.has_root();
      if (!root_ok && (x < 0 || x >= n)) {
        out.push_back({"edge " + std::to_string(e.id) + " has invalid endpoint " +
                           std::to_string(x),
                       e.id, x});
        endpoints_ok = false;
      }
    }
    if (e.u == e.v) {
      out.push_back({"self-loop at " + vertex_name(e.u) + " on edge " + std::to_string(e.id),
                     e.id, e.u});
      endpoints_ok = false;
    }
    if (i < inst.weights.size()) {
      const double w = inst.weights[i];
      if (!std::isfinite(w) || w < 0.0) {
        std::ostringstream msg;
        msg << "edge " << e.id << " has weight " << w << "; weights must be finite and >= 0";
        out.push_back({msg.str(), e.id, std::nullopt});
      }
    }
    if (!endpoints_ok) continue;
    const auto key = std::minmax(e.u, e.v);
    if (!seen_pairs.insert(key).second) {
      out.push_back({"parallel edge between " + vertex_name(key.first) + " and " +
                         vertex_name(key.second) + " (edge " + std::to_string(e.id) + ")",
                     e.id, std::nullopt});
    }
    if (e.u == kRootVertex) root_adjacent[static_cast<std::size_t>(e.v)] = true;
    if (e.v == kRootVertex) root_adjacent[static_cast<std::size_t>(e.u)] = true;
  }

  if (inst.has_root()) {
    for (int v = 0; v < n; ++v) {
      if (!root_adjacent[static_cast<std::size_t>(v)]) {
        out.push_back({"agent v" + std::to_string(v) + " not adjacent to root", std::nullopt, v});
      }
    }
  }
  return out;
}

void require_valid(const GameInstance& inst) {
  const auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : violations) msg += "\n  - " + v.message;
  throw Error(ErrorCode::InvalidArgument, msg);
}

double Allocation::sum() const {
  double s = 0.0;
  for (double x : values_) s += x;
  return s;
}

double Allocation::sum_over(Coalition s) const {
  double total = 0.0;
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (contains(s, static_cast<int>(v))) total += values_[v];
  }
  return total;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "l1_distance: index sets differ (" + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + " agents)");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double l1_distance(const Allocation& a, const Allocation& b) {
  return l1_distance(a.values(), b.values());
}

std::vector<double> perturb(std::span<const double> w, int edge_id, double delta) {
  if (edge_id < 0 || static_cast<std::size_t>(edge_id) >= w.size()) {
    throw Error(ErrorCode::InvalidArgument, "perturb: unknown edge id " + std::to_string(edge_id));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::InvalidArgument, "perturb: delta must be a positive finite number");
  }
  std::vector<double> out(w.begin(), w.end());
  out[static_cast<std::size_t>(edge_id)] += delta;
  return out;
}

void require_kind(const GameInstance& inst, GameKind kind, const char* op) {
  if (inst.kind != kind) {
    throw Error(ErrorCode::KindMismatch, std::string(op) + " requires a " + to_string(kind) +
                                             " game, got " + to_string(inst.kind));
  }
}

void require_weights(const GameInstance& inst, std::span<const double> w) {
  if (w.size() != inst.edges.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "weight vector has " + std::to_string(w.size()) + " entries for " +
                    std::to_string(inst.edges.size()) + " edges");
  }
}

}  // namespace coregauge
