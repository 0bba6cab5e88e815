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
#include "coregauge/rounding.hpp"

namespace coregauge {

/// Scan order of the greedy matching.
enum class ScanOrder {
  /// Decreasing rounded weight, ties by increasing edge id. The Lipschitz
  /// guarantees are stated for this order.
  RoundedWeight,
  /// Decreasing original weight, ties by increasing edge id. Kept for
  /// comparison only; no bound is claimed for it.
  OriginalWeight,
};

struct GreedyTrace {
  std::vector<int> matching;  // edge ids in the order they were taken
  Allocation raw;             // z_v = rounded weight of v's matched edge, else 0
};

RoundedWeights round_weights_matching(std::span<const double> w, double offset, double base);

/// One greedy pass at a fixed offset b. Edges with zero rounded weight are
/// never scanned.
GreedyTrace greedy_allocate(const GameInstance& inst, std::span<const double> w, double offset,
                            double base, ScanOrder order = ScanOrder::RoundedWeight);

BreakpointDecomposition breakpoints_matching(std::span<const double> w, double base);

/// Closed form of the integral over b in [0, 1] of greedy_allocate(b).raw.
Allocation integrate_matching(const GameInstance& inst, std::span<const double> w, double base,
                              ScanOrder order = ScanOrder::RoundedWeight);

/// Scales raw so it sums to grand.
Allocation normalize_welfare(const Allocation& raw, double grand);

/// (1/2 - epsilon)-approximate core allocation with base 1 + 2 epsilon.
/// epsilon must lie in (0, 1/2].
Allocation theorem1_allocate(const GameInstance& inst, std::span<const double> w, double epsilon);

inline double matching_base_for(double epsilon) { return 1.0 + 2.0 * epsilon; }

/// Lipschitz constant of theorem1_allocate: 24 / (base - 1) + 1.
inline double theorem1_lipschitz_bound(double epsilon) {
  return 24.0 / (matching_base_for(epsilon) - 1.0) + 1.0;
}

}  // namespace coregauge
