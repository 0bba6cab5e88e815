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

#include "coregauge/shapley.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>

namespace coregauge {

const char* to_string(ShapleyMethod method) noexcept {
  return method == ShapleyMethod::ExactSubsetSum ? "exact" : "sample";
}

ShapleyResult shapley_exact(const CharTable& table) {
  const int n = table.num_agents();
  if (n > kMaxShapleyExactAgents) {
    throw Error(ErrorCode::Size, "shapley_exact: at most " + std::to_string(kMaxShapleyExactAgents) +
                                     " agents, got " + std::to_string(n));
  }
  // weight[k] = k! (n-1-k)! / n!
  std::vector<double> weight(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double c = 1.0 / n;
    for (int i = 1; i <= k; ++i) c *= static_cast<double>(i) / static_cast<double>(n - i);
    weight[static_cast<std::size_t>(k)] = c;
  }

  Allocation s(static_cast<std::size_t>(n));
  const Coalition full = full_coalition(n);
  for (Coalition mask = 0; mask < full; ++mask) {
    const double base = table(mask);
    const double wk = weight[static_cast<std::size_t>(std::popcount(mask))];
    for (int v = 0; v < n; ++v) {
      if (contains(mask, v)) continue;
      s[static_cast<std::size_t>(v)] += wk * (table(mask | (Coalition{1} << v)) - base);
    }
  }
  return {std::move(s), ShapleyMethod::ExactSubsetSum, std::nullopt, std::nullopt};
}

ShapleyResult shapley_exact(const GameInstance& inst, std::span<const double> w) {
  if (inst.num_agents > kMaxShapleyExactAgents) {
    throw Error(ErrorCode::Size, "shapley_exact: at most " + std::to_string(kMaxShapleyExactAgents) +
                                     " agents, got " + std::to_string(inst.num_agents));
  }
  return shapley_exact(char_table(inst, w));
}

ShapleyResult shapley_exact(const GameInstance& inst) { return shapley_exact(inst, inst.weights); }

Allocation marginal_vector(const GameInstance& inst, std::span<const double> w, std::span<const int> order) {
  if (order.size() != static_cast<std::size_t>(inst.num_agents)) {
    throw Error(ErrorCode::InvalidArgument, "marginal_vector: order must list every agent once");
  }
  Allocation x(order.size());
  Coalition prefix = 0;
  double prev = 0.0;
  for (int v : order) {
    if (v < 0 || v >= inst.num_agents || contains(prefix, v)) {
      throw Error(ErrorCode::InvalidArgument, "marginal_vector: order must list every agent once");
    }
    prefix |= Coalition{1} << v;
    const double value = char_value(inst, w, prefix);
    x[static_cast<std::size_t>(v)] = value - prev;
    prev = value;
  }
  return x;
}

ShapleyResult shapley_sample(const GameInstance& inst, std::span<const double> w, std::uint64_t count,
                             std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "shapley_sample: count must be >= 1");
  const auto n = static_cast<std::size_t>(inst.num_agents);
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Allocation total(n);
  for (std::uint64_t k = 0; k < count; ++k) {
    // Fisher-Yates with rejection-sampled bounded draws keeps the stream
    // identical across standard libraries.
    for (std::size_t i = n; i > 1; --i) {
      const std::uint64_t bound = i;
      const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                  std::numeric_limits<std::uint64_t>::max() % bound;
      std::uint64_t r = rng();
      while (r >= limit) r = rng();
      std::swap(order[i - 1], order[static_cast<std::size_t>(r % bound)]);
    }
    const Allocation x = marginal_vector(inst, w, order);
    for (std::size_t v = 0; v < n; ++v) total[v] += x[v];
  }
  for (auto& x : total.mutable_values()) x /= static_cast<double>(count);
  return {std::move(total), ShapleyMethod::PermutationSample, count, seed};
}

double matching_lower_bound_value(int n, double delta) {
  if (n < 5 || n % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "matching_lower_bound_value: n must be odd and >= 5");
  }
  if (delta < 0.0) throw Error(ErrorCode::InvalidArgument, "matching_lower_bound_value: delta must be >= 0");
  double sum = 0.0;
  for (int i = 4; i <= n - 1; i += 2) sum += 1.0 / (i + 1);
  return delta * sum;
}

}  // namespace coregauge
