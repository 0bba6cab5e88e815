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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coregauge {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Size,
  KindMismatch,
  Infeasible,
  Internal,
};

/// Exception type thrown by every coregauge operation. The code maps 1:1 onto
/// the status codes of the C API.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class GameKind { Matching, MinSpanningTree };

const char* to_string(GameKind kind) noexcept;

/// Vertex id of the distinguished non-agent vertex r of a spanning tree game.
inline constexpr int kRootVertex = -1;

/// Agent subsets are bitmasks over the agent ids.
using Coalition = std::uint64_t;
inline constexpr int kMaxCoalitionAgents = 64;

inline Coalition full_coalition(int n) {
  return n >= 64 ? ~Coalition{0} : (Coalition{1} << n) - 1;
}
inline bool contains(Coalition s, int v) { return v >= 0 && ((s >> v) & 1U) != 0; }

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// A graph game: agents 0..num_agents-1, edges indexed by id, and the default
/// weight vector. Spanning tree games carry the extra vertex r, written as
/// kRootVertex in edge endpoints; it never indexes an allocation.
struct GameInstance {
  GameKind kind = GameKind::Matching;
  int num_agents = 0;
  std::vector<Edge> edges;      // edges[i].id == i once validated
  std::vector<double> weights;  // indexed by edge id

  bool has_root() const { return kind == GameKind::MinSpanningTree; }
  std::size_t num_edges() const { return edges.size(); }

  /// Same graph, different weights.
  GameInstance with_weights(std::vector<double> w) const;

  bool operator==(const GameInstance&) const = default;
};

struct Violation {
  std::string message;
  std::optional<int> edge_id;
  std::optional<int> vertex;
};

/// Empty result means the instance is well formed.
std::vector<Violation> validate_instance(const GameInstance& inst);

/// Throws Error(InvalidArgument) listing every violation.
void require_valid(const GameInstance& inst);

/// Per-agent real vector. Raw allocator outputs share the type with final
/// allocations.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::size_t n, double fill = 0.0) : values_(n, fill) {}
  explicit Allocation(std::vector<double> values) : values_(std::move(values)) {}
  Allocation(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

  double sum() const;
  double sum_over(Coalition s) const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool operator==(const Allocation&) const = default;

 private:
  std::vector<double> values_;
};

/// Sum of absolute coordinate differences. Throws on size mismatch.
double l1_distance(const Allocation& a, const Allocation& b);
double l1_distance(std::span<const double> a, std::span<const double> b);

/// w + delta * 1_e.
std::vector<double> perturb(std::span<const double> w, int edge_id, double delta);

/// Throws Error(KindMismatch) unless inst.kind == kind.
void require_kind(const GameInstance& inst, GameKind kind, const char* op);

/// Throws Error(InvalidArgument) unless w has one entry per edge.
void require_weights(const GameInstance& inst, std::span<const double> w);

}  // namespace coregauge
