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

#include "coregauge/rounding.hpp"

#include <algorithm>
#include <string>

namespace coregauge {

namespace {

void require_base(double base) {
  if (!(base > 1.0 && base <= 2.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "rounding base must lie in (1, 2], got " + std::to_string(base));
  }
}

// Unique integer i with base^(i+b) <= w < base^(i+1+b). The log estimate is
// corrected against pow so that the defining inequality holds as evaluated.
int rounding_exponent(double w, double b, double base, double log_base) {
  auto i = static_cast<int>(std::floor(std::log(w) / log_base - b));
  while (std::pow(base, i + b) > w) --i;
  while (std::pow(base, i + 1 + b) <= w) ++i;
  return i;
}

}  // namespace

RoundedWeights round_weights(std::span<const double> w, double offset, double base) {
  require_base(base);
  if (!(offset >= 0.0 && offset <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "rounding offset must lie in [0, 1], got " + std::to_string(offset));
  }
  RoundedWeights out;
  out.base = base;
  out.offset = offset;
  out.exponent.resize(w.size());
  out.rounded.assign(w.size(), 0.0);
  const double log_base = std::log(base);
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] < 0.0) throw Error(ErrorCode::InvalidArgument, "negative weight");
    if (w[e] == 0.0) continue;
    const int i = rounding_exponent(w[e], offset, base, log_base);
    out.exponent[e] = i;
    out.rounded[e] = std::pow(base, i + 1 + offset);
  }
  return out;
}

BreakpointDecomposition breakpoints(std::span<const double> w, double base) {
  require_base(base);
  const double log_base = std::log(base);
  std::vector<double> interior;
  for (double we : w) {
    if (!(we > 0.0)) continue;
    const double l = std::log(we) / log_base;
    const double frac = l - std::floor(l);
    if (frac > kBreakpointTolerance && frac < 1.0 - kBreakpointTolerance) interior.push_back(frac);
  }
  std::sort(interior.begin(), interior.end());
  BreakpointDecomposition bp;
  bp.points.push_back(0.0);
  for (double t : interior) {
    if (t - bp.points.back() > kBreakpointTolerance) bp.points.push_back(t);
  }
  bp.points.push_back(1.0);
  return bp;
}

BreakpointDecomposition merge(const BreakpointDecomposition& a, const BreakpointDecomposition& b) {
  std::vector<double> all;
  all.insert(all.end(), a.points.begin(), a.points.end());
  all.insert(all.end(), b.points.begin(), b.points.end());
  std::sort(all.begin(), all.end());
  BreakpointDecomposition out;
  out.points.push_back(0.0);
  for (double t : all) {
    if (t > kBreakpointTolerance && t < 1.0 - kBreakpointTolerance &&
        t - out.points.back() > kBreakpointTolerance) {
      out.points.push_back(t);
    }
  }
  out.points.push_back(1.0);
  return out;
}

double interval_scale(double lower, double upper, double mid, double base) {
  const double log_base = std::log(base);
  // base^(lower-mid) * (base^(upper-lower) - 1) / ln(base), with expm1 for short intervals.
  return std::pow(base, lower - mid) * std::expm1((upper - lower) * log_base) / log_base;
}

Allocation scale_to_total(const Allocation& raw, double grand) {
  double norm = 0.0;
  for (double x : raw) {
    if (x < 0.0) throw Error(ErrorCode::InvalidArgument, "normalization expects a nonnegative vector");
    norm += x;
  }
  if (grand < 0.0) throw Error(ErrorCode::InvalidArgument, "normalization expects grand value >= 0");
  if (norm == 0.0) {
    if (grand > 0.0) {
      throw Error(ErrorCode::Internal,
                  "raw allocation is zero but the grand coalition value is positive");
    }
    return Allocation(raw.size());
  }
  Allocation out = raw;
  const double factor = grand / norm;
  for (auto& x : out.mutable_values()) x *= factor;
  return out;
}

}  // namespace coregauge
