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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coregauge/game.hpp"
#include "json.hpp"

namespace coregauge {

// ---------------------------------------------------------------------------
// Approximate core verification
// ---------------------------------------------------------------------------

inline constexpr int kMaxCoreCheckAgents = 16;
inline constexpr int kMaxExactCoreAgents = 12;
inline constexpr double kDefaultSlackTolerance = 1e-6;
inline constexpr double kDefaultGrandTolerance = 1e-9;

enum class CoreDirection {
  WelfareLower,  // sum_S x >= alpha * nu(S), matching games
  CostUpper,     // sum_S x <= alpha * nu(S), spanning tree games
};

const char* to_string(CoreDirection d) noexcept;

struct CoalitionRow {
  Coalition subset = 0;
  double allocated = 0.0;
  double value = 0.0;
  double slack = 0.0;
};

struct CoreReport {
  double alpha = 1.0;
  CoreDirection direction = CoreDirection::WelfareLower;
  Coalition worst_subset = 0;
  double worst_slack = 0.0;
  double grand_residual = 0.0;
  double tolerance = kDefaultSlackTolerance;
  double grand_tolerance = kDefaultGrandTolerance;
  bool pass = false;
  std::vector<CoalitionRow> rows;  // one per S strictly inside V, empty set included
};

/// Enumerates every S strictly inside V against nu computed on w. Requires at
/// most kMaxCoreCheckAgents agents and alpha on the correct side of 1 for the
/// game kind.
CoreReport core_check(const GameInstance& inst, std::span<const double> w, const Allocation& x,
                      double alpha, double tol = kDefaultSlackTolerance,
                      double grand_tol = kDefaultGrandTolerance);
CoreReport core_check(const GameInstance& inst, const Allocation& x, double alpha,
                      double tol = kDefaultSlackTolerance, double grand_tol = kDefaultGrandTolerance);

/// A core point (alpha = 1) found by exact rational linear feasibility over
/// all coalition constraints, or nullopt when the core is empty.
std::optional<Allocation> exact_core_solve(const GameInstance& inst, std::span<const double> w);
std::optional<Allocation> exact_core_solve(const GameInstance& inst);

nlohmann::json to_json(const CoreReport& report, int num_agents);
std::string to_csv(const CoreReport& report, int num_agents);

// ---------------------------------------------------------------------------
// Lipschitz probing
// ---------------------------------------------------------------------------

enum class AllocatorKind {
  Theorem1,              // parameter: epsilon
  Theorem2,
  ShapleyExact,
  RawIntegrateMatching,  // parameter: base alpha
  RawIntegrateMst,
  ExactCoreSolve,
};

struct AllocatorSpec {
  AllocatorKind kind = AllocatorKind::Theorem2;
  double parameter = 0.0;

  /// theorem1[:eps] | theorem2 | shapley_exact | raw_integrate_matching[:alpha]
  /// | raw_integrate_mst | exact_core_solve
  static AllocatorSpec parse(const std::string& name);
  std::string name() const;
};

using AllocatorFn = std::function<Allocation(const GameInstance&, std::span<const double>)>;

AllocatorFn make_allocator(const AllocatorSpec& spec);

/// Proven Lipschitz constant of the allocator on the given game kind, if any.
std::optional<double> default_lipschitz_bound(const AllocatorSpec& spec, GameKind kind);

/// {w_e * 10^-k : k = 0..3} for w_e > 0, {10^-k : k = 0..3} for w_e = 0.
std::vector<double> probe_deltas(double w_e);

struct LipschitzProbe {
  int edge_id = 0;
  double weight = 0.0;
  double delta = 0.0;
  double ratio = 0.0;
};

struct LipschitzReport {
  std::string allocator;
  std::vector<LipschitzProbe> probes;
  double max_ratio = 0.0;
  double claimed_bound = 0.0;
  double tolerance = kDefaultSlackTolerance;
  bool pass = false;
};

/// One probe per (edge, delta) on the single-edge perturbation grid. Allocator
/// failures are rethrown with the probe identified.
LipschitzReport lipschitz_scan(const AllocatorSpec& spec, const GameInstance& inst, double claimed_bound,
                               double tol = kDefaultSlackTolerance);

/// ||A(w_a) - A(w_b)||_1 / ||w_a - w_b||_1.
double lipschitz_ratio(const AllocatorFn& allocator, const GameInstance& inst, std::span<const double> w_a,
                       std::span<const double> w_b);

nlohmann::json to_json(const LipschitzReport& report);
std::string to_csv(const LipschitzReport& report);

/// Total length of offsets b in [0, 1] at which w_f and w_f + delta round to
/// different values, read off the merged breakpoint decompositions.
double rounding_change_measure(double w_f, double delta, double base);

}  // namespace coregauge
