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
#include <optional>
#include <span>

#include "coregauge/game.hpp"
#include "coregauge/oracles.hpp"

namespace coregauge {

inline constexpr int kMaxShapleyExactAgents = 14;

enum class ShapleyMethod { ExactSubsetSum, PermutationSample };

const char* to_string(ShapleyMethod method) noexcept;

struct ShapleyResult {
  Allocation values;
  ShapleyMethod method = ShapleyMethod::ExactSubsetSum;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

/// s_v = sum over S not containing v of |S|! (n-1-|S|)! / n! * (nu(S+v) - nu(S)).
ShapleyResult shapley_exact(const CharTable& table);
ShapleyResult shapley_exact(const GameInstance& inst, std::span<const double> w);
ShapleyResult shapley_exact(const GameInstance& inst);

/// Marginal contribution vector of one agent order.
Allocation marginal_vector(const GameInstance& inst, std::span<const double> w, std::span<const int> order);

/// Average of marginal vectors over `count` uniformly random orders drawn from
/// a 64-bit Mersenne Twister seeded with `seed`.
ShapleyResult shapley_sample(const GameInstance& inst, std::span<const double> w, std::uint64_t count,
                             std::uint64_t seed);

/// delta * sum over even i in [4, n-1] of 1 / (i + 1): the certified lower
/// bound on ||Shap(w) - Shap(w')||_1 for the path pair whose second edge is
/// raised by delta. n must be odd and >= 5.
double matching_lower_bound_value(int n, double delta);

}  // namespace coregauge
