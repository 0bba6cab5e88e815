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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coregauge/analysis.hpp"
#include "coregauge/instances.hpp"
#include "coregauge/matching_alloc.hpp"
#include "coregauge/mst_alloc.hpp"
#include "coregauge/oracles.hpp"
#include "coregauge/rounding.hpp"
#include "coregauge/shapley.hpp"
#include "reference.hpp"

using namespace coregauge;

namespace {

constexpr double kSlackTol = 1e-6;
constexpr double kGrandTol = 1e-9;
constexpr double kLn2 = 0.69314718055994530942;
constexpr std::size_t kMonteCarloSamples = 100000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << checks << " checks";
    std::string text = summary;
    while (!text.empty() && (text.back() == ' ' || text.back() == ';')) text.pop_back();
    if (!text.empty()) s << ", " << text;
    if (failures > 0) s << "; " << failures << " failed, first: " << first_failure;
    return {failures == 0, s.str()};
  }
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

std::vector<GameInstance> matching_set(int count, int max_n, std::uint64_t seed0) {
  std::vector<GameInstance> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(gen_random(GameKind::Matching, 2 + i % (max_n - 1), 0.5, 10.0, seed0 + static_cast<std::uint64_t>(i)));
  }
  return out;
}

std::vector<GameInstance> mst_set(int count, int max_n, std::uint64_t seed0) {
  std::vector<GameInstance> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(
        gen_random(GameKind::MinSpanningTree, 1 + i % max_n, 0.5, 10.0, seed0 + static_cast<std::uint64_t>(i)));
  }
  return out;
}

// Every fifth instance gets one zero-weight edge so the w_e = 0 probes run.
std::vector<GameInstance> with_zero_edges(std::vector<GameInstance> set) {
  for (std::size_t i = 0; i < set.size(); i += 5) {
    auto& g = set[i];
    if (g.num_edges() == 0) continue;
    g.weights[i % g.num_edges()] = 0.0;
  }
  return set;
}

std::string label(const GameInstance& g, std::size_t index) {
  return std::string(g.kind == GameKind::Matching ? "matching" : "mst") + " #" + std::to_string(index) +
         " (n=" + std::to_string(g.num_agents) + ")";
}

const std::vector<double> kEpsilons{0.05, 0.25, 0.5};
const std::vector<double> kBases{1.1, 1.5, 2.0};

const std::vector<GameInstance>& core_matching() {
  static const auto set = matching_set(200, 10, 1000);
  return set;
}
const std::vector<GameInstance>& core_mst() {
  static const auto set = mst_set(200, 9, 2000);
  return set;
}
const std::vector<GameInstance>& probe_matching() {
  static const auto set = with_zero_edges(matching_set(50, 9, 3000));
  return set;
}
const std::vector<GameInstance>& probe_mst() {
  static const auto set = with_zero_edges(mst_set(50, 8, 4000));
  return set;
}

Outcome criterion1() {
  Tally t;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < core_matching().size(); ++i) {
    const auto& g = core_matching()[i];
    for (double eps : kEpsilons) {
      const auto x = theorem1_allocate(g, g.weights, eps);
      const auto r = core_check(g, x, 0.5 - eps, kSlackTol, kGrandTol);
      worst = std::min(worst, r.worst_slack);
      t.expect(r.pass, [&] { return label(g, i) + " eps=" + fmt(eps) + " slack " + fmt(r.worst_slack); });
    }
  }
  return t.outcome("200 instances x 3 epsilons, min slack " + fmt(worst));
}

Outcome criterion2() {
  Tally t;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < core_mst().size(); ++i) {
    const auto& g = core_mst()[i];
    const auto x = theorem2_allocate(g, g.weights);
    const auto r = core_check(g, x, 4.0, kSlackTol, kGrandTol);
    worst = std::min(worst, r.worst_slack);
    t.expect(r.pass, [&] { return label(g, i) + " slack " + fmt(r.worst_slack); });
  }
  return t.outcome("200 instances, min slack " + fmt(worst));
}

Outcome scan_all(const std::vector<GameInstance>& set, const AllocatorSpec& spec, double bound, Tally& t,
                 double& max_ratio) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto r = lipschitz_scan(spec, set[i], bound, kSlackTol);
    max_ratio = std::max(max_ratio, r.max_ratio);
    t.expect(r.pass, [&] { return spec.name() + " on " + label(set[i], i) + " ratio " + fmt(r.max_ratio); });
  }
  return {};
}

Outcome criterion3() {
  Tally t;
  std::string summary;
  for (double base : kBases) {
    double max_ratio = 0.0;
    scan_all(probe_matching(), {AllocatorKind::RawIntegrateMatching, base}, 12.0 / (base - 1.0), t, max_ratio);
    summary += "alpha " + fmt(base) + ": max " + fmt(max_ratio) + " <= " + fmt(12.0 / (base - 1.0)) + "; ";
  }
  return t.outcome(summary);
}

Outcome criterion4() {
  Tally t;
  double max_ratio = 0.0;
  scan_all(probe_mst(), {AllocatorKind::RawIntegrateMst, 0.0}, 10.0 / kLn2, t, max_ratio);
  return t.outcome("max " + fmt(max_ratio) + " <= " + fmt(10.0 / kLn2));
}

Outcome criterion5() {
  Tally t;
  std::string summary;
  for (double eps : kEpsilons) {
    double max_ratio = 0.0;
    const double bound = 24.0 / (matching_base_for(eps) - 1.0) + 1.0;
    scan_all(probe_matching(), {AllocatorKind::Theorem1, eps}, bound, t, max_ratio);
    summary += "eps " + fmt(eps) + ": max " + fmt(max_ratio) + " <= " + fmt(bound) + "; ";
  }
  double max_ratio = 0.0;
  scan_all(probe_mst(), {AllocatorKind::Theorem2, 0.0}, 20.0 / kLn2 + 1.0, t, max_ratio);
  summary += "tree: max " + fmt(max_ratio) + " <= " + fmt(20.0 / kLn2 + 1.0);
  return t.outcome(summary);
}

void check_integral(const GameInstance& g, std::size_t index, double base, const Allocation& closed,
                    const BreakpointDecomposition& bp, const std::function<Allocation(double)>& at, Tally& t,
                    std::mt19937_64& rng, double& worst_z) {
  const auto mc = ref::stratified_mean(static_cast<std::size_t>(g.num_agents), kMonteCarloSamples, 6000 + index,
                                       [&](double b) {
                                         const auto z = at(b);
                                         return std::vector<double>(z.begin(), z.end());
                                       });
  for (std::size_t v = 0; v < closed.size(); ++v) {
    const double err = std::abs(closed[v] - mc.mean[v]);
    if (mc.standard_error[v] > 0.0) worst_z = std::max(worst_z, err / mc.standard_error[v]);
    t.expect(err <= 3.0 * mc.standard_error[v] + 1e-12, [&] {
      return label(g, index) + " alpha " + fmt(base) + " agent " + std::to_string(v) + " closed " + fmt(closed[v]) +
             " mc " + fmt(mc.mean[v]) + " se " + fmt(mc.standard_error[v]);
    });
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < bp.num_intervals(); ++i) {
    for (int k = 0; k < 10; ++k) {
      const double b1 = bp.lower(i) + (0.01 + 0.98 * unit(rng)) * bp.length(i);
      const double b2 = bp.lower(i) + (0.01 + 0.98 * unit(rng)) * bp.length(i);
      const auto z1 = at(b1);
      const auto z2 = at(b2);
      const double factor = std::pow(base, b2 - b1);
      for (std::size_t v = 0; v < z1.size(); ++v) {
        t.expect(std::abs(z2[v] - factor * z1[v]) <= 1e-12 * std::abs(z2[v]), [&] {
          return label(g, index) + " scaling in interval " + std::to_string(i) + " agent " + std::to_string(v);
        });
      }
    }
  }
}

Outcome criterion6() {
  Tally t;
  std::mt19937_64 rng(66);
  double worst_z = 0.0;
  for (std::size_t i = 0; i < core_matching().size(); ++i) {
    const auto& g = core_matching()[i];
    for (double eps : kEpsilons) {
      const double base = matching_base_for(eps);
      check_integral(g, i, base, integrate_matching(g, g.weights, base), breakpoints_matching(g.weights, base),
                     [&](double b) { return greedy_allocate(g, g.weights, b, base).raw; }, t, rng, worst_z);
    }
  }
  for (std::size_t i = 0; i < core_mst().size(); ++i) {
    const auto& g = core_mst()[i];
    check_integral(g, i, 2.0, integrate_mst(g, g.weights), breakpoints_mst(g.weights),
                   [&](double b) { return mst_allocate(g, g.weights, b); }, t, rng, worst_z);
  }
  return t.outcome(std::to_string(kMonteCarloSamples) + " samples per integral, largest |error|/se " + fmt(worst_z));
}

Outcome criterion7() {
  Tally t;
  double max_ratio = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto g = gen_random(GameKind::MinSpanningTree, 1 + i % 6, 0.6, 10.0, 7000 + static_cast<std::uint64_t>(i));
    const auto s = shapley_exact(g).values;
    for (const auto& f : g.edges) {
      const double wf = g.weights[static_cast<std::size_t>(f.id)];
      for (double delta : {wf, wf / 10, wf / 100}) {
        const auto moved = shapley_exact(g, perturb(g.weights, f.id, delta)).values;
        const double diff = l1_distance(s, moved);
        max_ratio = std::max(max_ratio, diff / delta);
        t.expect(diff <= 2.0 * delta + 1e-9, [&] {
          return label(g, static_cast<std::size_t>(i)) + " edge " + std::to_string(f.id) + " diff " + fmt(diff) +
                 " delta " + fmt(delta);
        });
      }
    }
  }
  return t.outcome("max diff/delta " + fmt(max_ratio));
}

Outcome criterion8() {
  Tally t;
  std::string summary;
  for (int n : {5, 7, 9}) {
    const auto [base, moved] = gen_theorem3_pair(n, 0.1);
    const auto s = shapley_exact(base).values;
    const auto s2 = shapley_exact(moved).values;
    const double total = l1_distance(s, s2);
    const double bound = matching_lower_bound_value(n, 0.1);
    summary += "n=" + std::to_string(n) + ": l1 " + fmt(total) + " >= " + fmt(bound) + "; ";
    t.expect(total >= bound - 1e-9, [&] { return "n=" + std::to_string(n) + " l1 " + fmt(total); });
    for (int i = 4; i <= n - 1; i += 2) {
      // v_i counted from 1 is agent i - 1.
      const double moved_by = std::abs(s[static_cast<std::size_t>(i - 1)] - s2[static_cast<std::size_t>(i - 1)]);
      t.expect(moved_by >= 0.1 / (i + 1) - 1e-9, [&] {
        return "n=" + std::to_string(n) + " v_" + std::to_string(i) + " moved " + fmt(moved_by) + " < " +
               fmt(0.1 / (i + 1));
      });
    }
  }
  return t.outcome(summary);
}

Outcome criterion9() {
  Tally t;
  std::string summary;
  {
    const auto [a, b] = gen_example1_pair(5);
    const auto x = exact_core_solve(a);
    const auto y = exact_core_solve(b);
    t.expect(x && *x == Allocation({0, 1, 0, 1, 0}), [] { return std::string("core point of w at n=5"); });
    t.expect(y && *y == Allocation({0, 0, 1, 0, 0}), [] { return std::string("core point of w' at n=5"); });
  }
  const auto select = make_allocator({AllocatorKind::ExactCoreSolve, 0.0});
  for (int n : {5, 7, 9, 11}) {
    const auto [a, b] = gen_example1_pair(n);
    const double ratio = lipschitz_ratio(select, a, a.weights, b.weights);
    summary += "n=" + std::to_string(n) + ": " + fmt(ratio) + "; ";
    t.expect(ratio == (n - 2) / 2.0, [&] { return "n=" + std::to_string(n) + " ratio " + fmt(ratio); });
  }
  return t.outcome(summary);
}

Outcome criterion10() {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const auto g =
        gen_random(GameKind::MinSpanningTree, 1 + i % 8, 0.5, 10.0, 10000 + static_cast<std::uint64_t>(i));
    const Coalition full = full_coalition(g.num_agents);
    const auto bp = breakpoints_mst(g.weights);
    for (std::size_t k = 0; k < bp.num_intervals(); ++k) {
      const auto hat = round_weights_mst(g.weights, bp.midpoint(k)).rounded;
      const auto tree = auxiliary_tree(g, hat);
      const double whole = connector_sum(tree, full);
      const double opt = mst_weight(g, hat, full);
      t.expect(std::abs(whole - opt) <= 1e-9, [&] {
        return label(g, static_cast<std::size_t>(i)) + " V: " + fmt(whole) + " vs " + fmt(opt);
      });
      for (Coalition s = 0; s < full; ++s) {
        const double part = connector_sum(tree, s);
        t.expect(part <= mst_weight(g, hat, s) + 1e-9, [&] {
          return label(g, static_cast<std::size_t>(i)) + " S=" + std::to_string(s) + ": " + fmt(part);
        });
      }
    }
  }
  return t.outcome("100 instances, every interval midpoint");
}

// Runs f(b, w2, f_id) at the midpoint of every interval of the joint
// decomposition of w and each single-edge perturbation of w.
template <class Decompose, class Body>
void for_each_probe(const GameInstance& g, Decompose&& decompose, Body&& body) {
  for (const auto& f : g.edges) {
    const double wf = g.weights[static_cast<std::size_t>(f.id)];
    for (double delta : probe_deltas(wf)) {
      const auto w2 = perturb(g.weights, f.id, delta);
      const auto bp = merge(decompose(g.weights), decompose(w2));
      for (std::size_t k = 0; k < bp.num_intervals(); ++k) body(f.id, delta, w2, bp, k);
    }
  }
}

Outcome criterion11() {
  Tally t;
  long changed = 0;
  for (std::size_t i = 0; i < probe_matching().size(); ++i) {
    const auto& g = probe_matching()[i];
    for (double base : kBases) {
      for_each_probe(
          g, [&](const std::vector<double>& w) { return breakpoints_matching(w, base); },
          [&](int f, double delta, const std::vector<double>& w2, const BreakpointDecomposition& bp, std::size_t k) {
            const double b = bp.midpoint(k);
            const double h1 = round_weights_matching(g.weights, b, base).rounded[static_cast<std::size_t>(f)];
            const double h2 = round_weights_matching(w2, b, base).rounded[static_cast<std::size_t>(f)];
            const auto z1 = greedy_allocate(g, g.weights, b, base).raw;
            const auto z2 = greedy_allocate(g, w2, b, base).raw;
            if (h1 == h2) {
              t.expect(z1 == z2, [&] { return label(g, i) + " unchanged rounding but different output"; });
            } else {
              ++changed;
              const double diff = l1_distance(z1, z2);
              t.expect(diff <= 2.0 * h2 * (1 + 1e-12), [&] {
                return label(g, i) + " alpha " + fmt(base) + " edge " + std::to_string(f) + " delta " +
                       fmt(delta) + " diff " + fmt(diff) + " > " + fmt(2.0 * h2);
              });
            }
          });
    }
  }
  for (std::size_t i = 0; i < probe_mst().size(); ++i) {
    const auto& g = probe_mst()[i];
    for_each_probe(
        g, [](const std::vector<double>& w) { return breakpoints_mst(w); },
        [&](int f, double delta, const std::vector<double>& w2, const BreakpointDecomposition& bp, std::size_t k) {
          const double b = bp.midpoint(k);
          const double h1 = round_weights_mst(g.weights, b).rounded[static_cast<std::size_t>(f)];
          const double h2 = round_weights_mst(w2, b).rounded[static_cast<std::size_t>(f)];
          const auto z1 = mst_allocate(g, g.weights, b);
          const auto z2 = mst_allocate(g, w2, b);
          if (h1 == h2) {
            t.expect(z1 == z2, [&] { return label(g, i) + " unchanged rounding but different output"; });
          } else {
            ++changed;
            const double diff = l1_distance(z1, z2);
            t.expect(diff <= (h1 + 2.0 * h2) * (1 + 1e-12), [&] {
              return label(g, i) + " edge " + std::to_string(f) + " delta " + fmt(delta) + " diff " + fmt(diff) +
                     " > " + fmt(h1 + 2.0 * h2);
            });
          }
        });
  }
  return t.outcome(std::to_string(changed) + " offsets with a changed rounded edge");
}

Outcome criterion12() {
  Tally t;
  double worst = 0.0;
  const auto check = [&](const GameInstance& g, std::size_t i, double base, auto&& decompose, auto&& rounded_at) {
    for (const auto& f : g.edges) {
      const double wf = g.weights[static_cast<std::size_t>(f.id)];
      for (double delta : probe_deltas(wf)) {
        const auto w2 = perturb(g.weights, f.id, delta);
        const auto bp = merge(decompose(g.weights), decompose(w2));
        double measure = 0.0;
        for (std::size_t k = 0; k < bp.num_intervals(); ++k) {
          const double b = bp.midpoint(k);
          if (rounded_at(g.weights, b)[static_cast<std::size_t>(f.id)] !=
              rounded_at(w2, b)[static_cast<std::size_t>(f.id)]) {
            measure += bp.length(k);
          }
        }
        // b ranges over one period, so the measure saturates at 1 once
        // w_f + delta spans a full factor of the base.
        const double expect = wf > 0.0 ? std::min(1.0, std::log1p(delta / wf) / std::log(base)) : 1.0;
        const double err = std::abs(measure - expect);
        worst = std::max(worst, err);
        t.expect(err <= 1e-9, [&] {
          return label(g, i) + " base " + fmt(base) + " w_f " + fmt(wf) + " delta " + fmt(delta) + ": " +
                 fmt(measure) + " vs " + fmt(expect);
        });
        const double single = wf > 0.0 ? rounding_change_measure(wf, delta, base) : 1.0;
        t.expect(std::abs(single - expect) <= 1e-9, [&] { return label(g, i) + " single-edge measure " + fmt(single); });
      }
    }
  };
  for (std::size_t i = 0; i < probe_matching().size(); ++i) {
    for (double base : kBases) {
      check(
          probe_matching()[i], i, base, [&](const std::vector<double>& w) { return breakpoints_matching(w, base); },
          [&](const std::vector<double>& w, double b) { return round_weights_matching(w, b, base).rounded; });
    }
  }
  for (std::size_t i = 0; i < probe_mst().size(); ++i) {
    check(
        probe_mst()[i], i, 2.0, [](const std::vector<double>& w) { return breakpoints_mst(w); },
        [](const std::vector<double>& w, double b) { return round_weights_mst(w, b).rounded; });
  }
  return t.outcome("max error " + fmt(worst));
}

struct Criterion {
  int number;
  const char* name;
  Outcome (*run)();
  double time_limit;  // seconds, 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "core approximability, matching", criterion1, 60.0},
      {2, "core approximability, spanning tree", criterion2, 60.0},
      {3, "raw Lipschitz, matching integral", criterion3, 0.0},
      {4, "raw Lipschitz, spanning tree integral", criterion4, 0.0},
      {5, "end-to-end Lipschitz", criterion5, 0.0},
      {6, "closed-form integral vs Monte Carlo, interval scaling", criterion6, 0.0},
      {7, "spanning tree Shapley moves by at most 2 delta", criterion7, 0.0},
      {8, "matching Shapley lower bound on the path pair", criterion8, 0.0},
      {9, "core selection on the path pair", criterion9, 0.0},
      {10, "connector identity", criterion10, 0.0},
      {11, "fixed-offset difference bounds", criterion11, 0.0},
      {12, "bad-offset measure", criterion12, 0.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && secs > c.time_limit) {
      out.pass = false;
      out.detail += "; over the " + fmt(c.time_limit) + " s budget";
    }
    std::printf("%s %2d %s: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", c.number, c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
