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

#include "coregauge/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

#include "coregauge/matching_alloc.hpp"
#include "coregauge/mst_alloc.hpp"
#include "coregauge/oracles.hpp"
#include "coregauge/rounding.hpp"
#include "coregauge/shapley.hpp"
#include "coregauge/union_find.hpp"
#include "exact_lp.hpp"

namespace coregauge {

namespace {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::vector<int> members(Coalition s, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (contains(s, v)) out.push_back(v);
  }
  return out;
}

std::string members_csv(Coalition s, int n) {
  std::string out;
  for (int v : members(s, n)) {
    if (!out.empty()) out += ';';
    out += std::to_string(v);
  }
  return out;
}

// nu(S) for every S in exact rationals over the (exactly representable)
// double weights. Rounding nu in floating point can make a core with tight
// constraints look empty.
std::vector<mpq_class> exact_char_values(const GameInstance& inst, std::span<const double> w) {
  const int n = inst.num_agents;
  const std::size_t count = std::size_t{1} << n;
  std::vector<mpq_class> values(count);
  if (inst.kind == GameKind::Matching) {
    for (std::size_t s = 1; s < count; ++s) {
      const Coalition mask = s;
      const int v = std::countr_zero(mask);
      const Coalition rest = mask & ~(Coalition{1} << v);
      mpq_class best = values[rest];
      for (const Edge& e : inst.edges) {
        const int other = e.u == v ? e.v : (e.v == v ? e.u : -1);
        if (other < 0 || !contains(rest, other)) continue;
        mpq_class candidate = mpq_class(w[static_cast<std::size_t>(e.id)]) +
                              values[rest & ~(Coalition{1} << other)];
        if (candidate > best) best = std::move(candidate);
      }
      values[s] = std::move(best);
    }
    return values;
  }
  std::vector<int> order(inst.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
  });
  const auto slot = [n](int vertex) { return static_cast<std::size_t>(vertex == kRootVertex ? n : vertex); };
  for (std::size_t s = 1; s < count; ++s) {
    const Coalition mask = s;
    UnionFind uf(static_cast<std::size_t>(n) + 1);
    mpq_class total = 0;
    for (int id : order) {
      const Edge& e = inst.edges[static_cast<std::size_t>(id)];
      const bool inside = (e.u == kRootVertex || contains(mask, e.u)) && (e.v == kRootVertex || contains(mask, e.v));
      if (inside && uf.unite(slot(e.u), slot(e.v))) total += mpq_class(w[static_cast<std::size_t>(id)]);
    }
    values[s] = std::move(total);
  }
  return values;
}

CoreDirection direction_for(GameKind kind) {
  return kind == GameKind::Matching ? CoreDirection::WelfareLower : CoreDirection::CostUpper;
}

}  // namespace

const char* to_string(CoreDirection d) noexcept {
  return d == CoreDirection::WelfareLower ? "welfare_lower" : "cost_upper";
}

CoreReport core_check(const GameInstance& inst, std::span<const double> w, const Allocation& x, double alpha,
                      double tol, double grand_tol) {
  const int n = inst.num_agents;
  if (n > kMaxCoreCheckAgents) {
    throw Error(ErrorCode::Size, "core_check: at most " + std::to_string(kMaxCoreCheckAgents) +
                                     " agents, got " + std::to_string(n));
  }
  if (x.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidArgument, "core_check: allocation size does not match the agent set");
  }
  const CoreDirection direction = direction_for(inst.kind);
  if (direction == CoreDirection::WelfareLower && !(alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "core_check: alpha must be <= 1 for a matching game");
  }
  if (direction == CoreDirection::CostUpper && !(alpha >= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "core_check: alpha must be >= 1 for a spanning tree game");
  }

  const CharTable table = char_table(inst, w);
  CoreReport report;
  report.alpha = alpha;
  report.direction = direction;
  report.tolerance = tol;
  report.grand_tolerance = grand_tol;
  const Coalition full = full_coalition(n);
  report.rows.reserve(static_cast<std::size_t>(full));
  bool first = true;
  for (Coalition s = 0; s < full; ++s) {
    CoalitionRow row;
    row.subset = s;
    row.allocated = x.sum_over(s);
    row.value = table(s);
    row.slack = direction == CoreDirection::WelfareLower ? row.allocated - alpha * row.value
                                                         : alpha * row.value - row.allocated;
    if (first || row.slack < report.worst_slack) {
      report.worst_slack = row.slack;
      report.worst_subset = s;
      first = false;
    }
    report.rows.push_back(row);
  }
  report.grand_residual = std::abs(x.sum() - table.grand());
  report.pass = report.worst_slack >= -tol && report.grand_residual <= grand_tol;
  return report;
}

CoreReport core_check(const GameInstance& inst, const Allocation& x, double alpha, double tol,
                      double grand_tol) {
  return core_check(inst, inst.weights, x, alpha, tol, grand_tol);
}

std::optional<Allocation> exact_core_solve(const GameInstance& inst, std::span<const double> w) {
  const int n = inst.num_agents;
  if (n > kMaxExactCoreAgents) {
    throw Error(ErrorCode::Size, "exact_core_solve: at most " + std::to_string(kMaxExactCoreAgents) +
                                     " agents, got " + std::to_string(n));
  }
  require_weights(inst, w);
  const std::vector<mpq_class> table = exact_char_values(inst, w);
  const Coalition full = full_coalition(n);
  const bool welfare = inst.kind == GameKind::Matching;
  const auto nu = [&](Coalition s) -> const mpq_class& { return table[static_cast<std::size_t>(s)]; };

  // Shift x = y + lower with lower a valid bound for every core point, so the
  // search runs over y >= 0.
  std::vector<mpq_class> lower(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const Coalition single = Coalition{1} << v;
    lower[static_cast<std::size_t>(v)] = welfare ? nu(single) : nu(full) - nu(full & ~single);
  }

  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  const auto add_row = [&](Coalition s, int sign, const mpq_class& bound) {
    // sign * sum_{v in S} x_v <= sign * bound, rewritten over y.
    std::vector<mpq_class> row(static_cast<std::size_t>(n));
    mpq_class shifted = bound;
    for (int v = 0; v < n; ++v) {
      if (!contains(s, v)) continue;
      row[static_cast<std::size_t>(v)] = sign;
      shifted -= lower[static_cast<std::size_t>(v)];
    }
    rows.push_back(std::move(row));
    rhs.push_back(sign * shifted);
  };
  for (Coalition s = 1; s < full; ++s) add_row(s, welfare ? -1 : 1, nu(s));
  add_row(full, 1, nu(full));
  add_row(full, -1, nu(full));

  const auto y = detail::find_feasible_point(rows, rhs);
  if (!y) return std::nullopt;
  Allocation x(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < x.size(); ++v) {
    const mpq_class value = (*y)[v] + lower[v];
    x[v] = value.get_d();
  }
  return x;
}

std::optional<Allocation> exact_core_solve(const GameInstance& inst) {
  return exact_core_solve(inst, inst.weights);
}

nlohmann::json to_json(const CoreReport& report, int num_agents) {
  return {{"alpha", report.alpha},
          {"direction", to_string(report.direction)},
          {"worst_subset", members(report.worst_subset, num_agents)},
          {"worst_slack", report.worst_slack},
          {"grand_residual", report.grand_residual},
          {"tolerance", report.tolerance},
          {"grand_tolerance", report.grand_tolerance},
          {"num_subsets", report.rows.size()},
          {"pass", report.pass}};
}

std::string to_csv(const CoreReport& report, int num_agents) {
  std::ostringstream out;
  out << "subset,size,allocated,value,slack\n";
  for (const auto& row : report.rows) {
    out << members_csv(row.subset, num_agents) << ',' << std::popcount(row.subset) << ','
        << format_double(row.allocated) << ',' << format_double(row.value) << ','
        << format_double(row.slack) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

AllocatorSpec AllocatorSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::optional<double> param;
  if (colon != std::string::npos) {
    const std::string rest = text.substr(colon + 1);
    double value = 0.0;
    const auto res = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size()) {
      throw Error(ErrorCode::InvalidArgument, "allocator parameter \"" + rest + "\" is not a number");
    }
    param = value;
  }
  AllocatorSpec spec;
  if (name == "theorem1") {
    spec = {AllocatorKind::Theorem1, param.value_or(0.25)};
  } else if (name == "theorem2") {
    spec = {AllocatorKind::Theorem2, 0.0};
  } else if (name == "shapley_exact") {
    spec = {AllocatorKind::ShapleyExact, 0.0};
  } else if (name == "raw_integrate_matching") {
    spec = {AllocatorKind::RawIntegrateMatching, param.value_or(2.0)};
  } else if (name == "raw_integrate_mst") {
    spec = {AllocatorKind::RawIntegrateMst, 0.0};
  } else if (name == "exact_core_solve") {
    spec = {AllocatorKind::ExactCoreSolve, 0.0};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown allocator \"" + name + "\"");
  }
  if (param && spec.kind != AllocatorKind::Theorem1 && spec.kind != AllocatorKind::RawIntegrateMatching) {
    throw Error(ErrorCode::InvalidArgument, "allocator \"" + name + "\" takes no parameter");
  }
  return spec;
}

std::string AllocatorSpec::name() const {
  switch (kind) {
    case AllocatorKind::Theorem1:
      return "theorem1:" + format_double(parameter);
    case AllocatorKind::Theorem2:
      return "theorem2";
    case AllocatorKind::ShapleyExact:
      return "shapley_exact";
    case AllocatorKind::RawIntegrateMatching:
      return "raw_integrate_matching:" + format_double(parameter);
    case AllocatorKind::RawIntegrateMst:
      return "raw_integrate_mst";
    case AllocatorKind::ExactCoreSolve:
      return "exact_core_solve";
  }
  return "unknown";
}

AllocatorFn make_allocator(const AllocatorSpec& spec) {
  const double p = spec.parameter;
  switch (spec.kind) {
    case AllocatorKind::Theorem1:
      return [p](const GameInstance& g, std::span<const double> w) { return theorem1_allocate(g, w, p); };
    case AllocatorKind::Theorem2:
      return [](const GameInstance& g, std::span<const double> w) { return theorem2_allocate(g, w); };
    case AllocatorKind::ShapleyExact:
      return [](const GameInstance& g, std::span<const double> w) { return shapley_exact(g, w).values; };
    case AllocatorKind::RawIntegrateMatching:
      return [p](const GameInstance& g, std::span<const double> w) { return integrate_matching(g, w, p); };
    case AllocatorKind::RawIntegrateMst:
      return [](const GameInstance& g, std::span<const double> w) { return integrate_mst(g, w); };
    case AllocatorKind::ExactCoreSolve:
      return [](const GameInstance& g, std::span<const double> w) {
        auto x = exact_core_solve(g, w);
        if (!x) throw Error(ErrorCode::Infeasible, "core is empty");
        return *x;
      };
  }
  throw Error(ErrorCode::Internal, "unhandled allocator kind");
}

std::optional<double> default_lipschitz_bound(const AllocatorSpec& spec, GameKind kind) {
  switch (spec.kind) {
    case AllocatorKind::Theorem1:
      return theorem1_lipschitz_bound(spec.parameter);
    case AllocatorKind::Theorem2:
      return theorem2_lipschitz_bound();
    case AllocatorKind::ShapleyExact:
      if (kind == GameKind::MinSpanningTree) return 2.0;
      return std::nullopt;
    case AllocatorKind::RawIntegrateMatching:
      return 12.0 / (spec.parameter - 1.0);
    case AllocatorKind::RawIntegrateMst:
      return raw_mst_lipschitz_bound();
    case AllocatorKind::ExactCoreSolve:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<double> probe_deltas(double w_e) {
  std::vector<double> out;
  double scale = 1.0;
  for (int k = 0; k <= 3; ++k) {
    out.push_back(w_e > 0.0 ? w_e * scale : scale);
    scale /= 10.0;
  }
  return out;
}

double lipschitz_ratio(const AllocatorFn& allocator, const GameInstance& inst, std::span<const double> w_a,
                       std::span<const double> w_b) {
  const double dw = l1_distance(w_a, w_b);
  if (dw == 0.0) throw Error(ErrorCode::InvalidArgument, "lipschitz_ratio: weight vectors are equal");
  return l1_distance(allocator(inst, w_a), allocator(inst, w_b)) / dw;
}

LipschitzReport lipschitz_scan(const AllocatorSpec& spec, const GameInstance& inst, double claimed_bound,
                               double tol) {
  const AllocatorFn allocator = make_allocator(spec);
  LipschitzReport report;
  report.allocator = spec.name();
  report.claimed_bound = claimed_bound;
  report.tolerance = tol;

  Allocation base;
  try {
    base = allocator(inst, inst.weights);
  } catch (const Error& e) {
    throw Error(e.code(), "allocator failed on the unperturbed weights: " + std::string(e.what()));
  }
  for (const Edge& edge : inst.edges) {
    const double we = inst.weights[static_cast<std::size_t>(edge.id)];
    for (double delta : probe_deltas(we)) {
      const auto w2 = perturb(inst.weights, edge.id, delta);
      Allocation moved;
      try {
        moved = allocator(inst, w2);
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "allocator failed on probe edge " << edge.id << " delta " << format_double(delta) << ": "
            << e.what();
        throw Error(e.code(), msg.str());
      }
      const double ratio = l1_distance(base, moved) / delta;
      report.probes.push_back({edge.id, we, delta, ratio});
      report.max_ratio = std::max(report.max_ratio, ratio);
    }
  }
  report.pass = report.max_ratio <= claimed_bound + tol;
  return report;
}

nlohmann::json to_json(const LipschitzReport& report) {
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& p : report.probes) {
    probes.push_back({{"edge_id", p.edge_id}, {"w_e", p.weight}, {"delta", p.delta}, {"ratio", p.ratio}});
  }
  return {{"allocator", report.allocator},     {"claimed_bound", report.claimed_bound},
          {"max_ratio", report.max_ratio},     {"tolerance", report.tolerance},
          {"pass", report.pass},               {"probes", std::move(probes)}};
}

std::string to_csv(const LipschitzReport& report) {
  std::ostringstream out;
  out << "edge_id,w_e,delta,ratio\n";
  for (const auto& p : report.probes) {
    out << p.edge_id << ',' << format_double(p.weight) << ',' << format_double(p.delta) << ','
        << format_double(p.ratio) << '\n';
  }
  return out.str();
}

double rounding_change_measure(double w_f, double delta, double base) {
  if (w_f < 0.0 || !(delta > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rounding_change_measure: need w_f >= 0 and delta > 0");
  }
  const std::array<double, 1> before{w_f};
  const std::array<double, 1> after{w_f + delta};
  const auto bp = merge(breakpoints(before, base), breakpoints(after, base));
  double measure = 0.0;
  for (std::size_t i = 0; i < bp.num_intervals(); ++i) {
    const double b = bp.midpoint(i);
    if (round_weights(before, b, base).rounded[0] != round_weights(after, b, base).rounded[0]) {
      measure += bp.length(i);
    }
  }
  return measure;
}

}  // namespace coregauge
