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

#include "coregauge/matching_alloc.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coregauge/oracles.hpp"

namespace coregauge {

RoundedWeights round_weights_matching(std::span<const double> w, double offset, double base) {
  return round_weights(w, offset, base);
}

GreedyTrace greedy_allocate(const GameInstance& inst, std::span<const double> w, double offset,
                            double base, ScanOrder order) {
  require_kind(inst, GameKind::Matching, "greedy_allocate");
  require_weights(inst, w);
  const RoundedWeights rw = round_weights(w, offset, base);
  const auto& hat = rw.rounded;

  std::vector<int> scan;
  scan.reserve(inst.edges.size());
  for (std::size_t e = 0; e < hat.size(); ++e) {
    if (hat[e] > 0.0) scan.push_back(static_cast<int>(e));
  }
  const std::span<const double> key =
      order == ScanOrder::RoundedWeight ? std::span<const double>(hat) : w;
  std::stable_sort(scan.begin(), scan.end(), [&](int a, int b) {
    return key[static_cast<std::size_t>(a)] > key[static_cast<std::size_t>(b)];
  });

  GreedyTrace trace;
  trace.raw = Allocation(static_cast<std::size_t>(inst.num_agents));
  std::vector<bool> covered(static_cast<std::size_t>(inst.num_agents), false);
  for (int id : scan) {
    const Edge& e = inst.edges[static_cast<std::size_t>(id)];
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (covered[u] || covered[v]) continue;
    covered[u] = covered[v] = true;
    trace.matching.push_back(id);
    trace.raw[u] = hat[static_cast<std::size_t>(id)];
    trace.raw[v] = hat[static_cast<std::size_t>(id)];
  }
  return trace;
}

BreakpointDecomposition breakpoints_matching(std::span<const double> w, double base) {
  return breakpoints(w, base);
}

Allocation integrate_matching(const GameInstance& inst, std::span<const double> w, double base,
                              ScanOrder order) {
  require_kind(inst, GameKind::Matching, "integrate_matching");
  require_weights(inst, w);
  const auto bp = breakpoints_matching(w, base);
  return integrate_piecewise(bp, base, static_cast<std::size_t>(inst.num_agents),
                             [&](double b) { return greedy_allocate(inst, w, b, base, order).raw; });
}

Allocation normalize_welfare(const Allocation& raw, double grand) { return scale_to_total(raw, grand); }

Allocation theorem1_allocate(const GameInstance& inst, std::span<const double> w, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw Error(ErrorCode::InvalidArgument,
                "epsilon must lie in (0, 1/2], got " + std::to_string(epsilon));
  }
  require_kind(inst, GameKind::Matching, "theorem1_allocate");
  const Allocation raw = integrate_matching(inst, w, matching_base_for(epsilon));
  const double grand = max_weight_matching(inst, w, full_coalition(inst.num_agents));
  return normalize_welfare(raw, grand);
}

}  // namespace coregauge
