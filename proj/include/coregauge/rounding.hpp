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

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "coregauge/game.hpp"
#include "coregauge/parallel.hpp"

namespace coregauge {

/// Power-of-base snapping of a weight vector at offset b.
///
/// For every edge with w_e > 0 the exponent i_e is the unique integer with
///   base^(i_e + b) <= w_e < base^(i_e + 1 + b)
/// and the rounded weight is base^(i_e + 1 + b). Zero-weight edges have no
/// exponent and round to 0. Rounded weights therefore satisfy
/// w_e < rounded_e <= base * w_e.
struct RoundedWeights {
  double base = 2.0;
  double offset = 0.0;
  std::vector<std::optional<int>> exponent;
  std::vector<double> rounded;
};

/// Throws Error(InvalidArgument) unless base is in (1, 2] and offset in [0, 1].
RoundedWeights round_weights(std::span<const double> w, double offset, double base);

/// Offsets at which some rounding exponent changes, plus the end points 0 and
/// 1. Between consecutive points every exponent is constant in b.
struct BreakpointDecomposition {
  std::vector<double> points;  // 0 = t_0 < t_1 < ... < t_{k+1} = 1

  std::size_t num_intervals() const { return points.size() - 1; }
  double lower(std::size_t i) const { return points[i]; }
  double upper(std::size_t i) const { return points[i + 1]; }
  double midpoint(std::size_t i) const { return 0.5 * (points[i] + points[i + 1]); }
  double length(std::size_t i) const { return points[i + 1] - points[i]; }
};

/// Merge tolerance for breakpoints.
inline constexpr double kBreakpointTolerance = 1e-12;

/// Fractional part of log_base(w_e) for each positive weight, deduplicated.
BreakpointDecomposition breakpoints(std::span<const double> w, double base);

/// Union of two decompositions (used to compare w against a perturbed w').
BreakpointDecomposition merge(const BreakpointDecomposition& a, const BreakpointDecomposition& b);

/// Integral over [lower, upper] of base^(b - mid) db, which is the weight a
/// representative evaluated at mid carries when every value scales as base^b.
double interval_scale(double lower, double upper, double mid, double base);

/// Integral over b in [0, 1] of eval(b), where eval's output is a per-agent
/// vector that scales as base^b inside each open interval of `bp`. eval is
/// called once per interval at the midpoint.
template <class Eval>
Allocation integrate_piecewise(const BreakpointDecomposition& bp, double base, std::size_t num_agents,
                               Eval&& eval) {
  std::vector<Allocation> parts(bp.num_intervals());
  parallel_for(bp.num_intervals(), [&](std::size_t i) {
    const double mid = bp.midpoint(i);
    Allocation z = eval(mid);
    const double scale = interval_scale(bp.lower(i), bp.upper(i), mid, base);
    for (auto& x : z.mutable_values()) x *= scale;
    parts[i] = std::move(z);
  });
  Allocation total(num_agents);
  for (const auto& part : parts) {
    for (std::size_t v = 0; v < num_agents; ++v) total[v] += part[v];
  }
  return total;
}

/// x = (grand / ||raw||_1) * raw. A zero raw vector maps to zero when grand is
/// zero and is an error otherwise.
Allocation scale_to_total(const Allocation& raw, double grand);

}  // namespace coregauge
