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

#include "coregauge/coregauge.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "coregauge/analysis.hpp"
#include "coregauge/instances.hpp"
#include "coregauge/json_io.hpp"
#include "coregauge/matching_alloc.hpp"
#include "coregauge/mst_alloc.hpp"
#include "coregauge/oracles.hpp"
#include "coregauge/parallel.hpp"
#include "coregauge/shapley.hpp"

struct cg_instance {
  coregauge::GameInstance rep;
};
struct cg_vector {
  coregauge::Allocation rep;
};
struct cg_core_report {
  coregauge::CoreReport rep;
  int num_agents;
};
struct cg_lipschitz_report {
  coregauge::LipschitzReport rep;
};

namespace {

thread_local std::string g_last_error;

cg_status status_of(coregauge::ErrorCode code) {
  using coregauge::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return CG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse:
      return CG_ERR_PARSE;
    case ErrorCode::Size:
      return CG_ERR_SIZE;
    case ErrorCode::KindMismatch:
      return CG_ERR_KIND_MISMATCH;
    case ErrorCode::Infeasible:
      return CG_ERR_INFEASIBLE;
    case ErrorCode::Internal:
      return CG_ERR_INTERNAL;
  }
  return CG_ERR_INTERNAL;
}

cg_status fail(cg_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs body and converts exceptions into status codes.
template <class Body>
cg_status guarded(Body&& body) {
  try {
    body();
    return CG_OK;
  } catch (const coregauge::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CG_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_non_null(const void* p, const char* what) {
  if (p == nullptr) throw coregauge::Error(coregauge::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

cg_vector* wrap(coregauge::Allocation x) { return new cg_vector{std::move(x)}; }

}  // namespace

extern "C" {

const char* cg_last_error(void) { return g_last_error.c_str(); }

const char* cg_version(void) { return "0.1.0"; }

void cg_string_free(char* s) { std::free(s); }

void cg_set_threads(int threads) { coregauge::set_thread_count(threads); }

cg_status cg_instance_from_json(const char* json_text, cg_instance** out) {
  return guarded([&] {
    require_non_null(json_text, "json_text");
    require_non_null(out, "out");
    auto inst = coregauge::instance_from_string(json_text);
    coregauge::require_valid(inst);
    *out = new cg_instance{std::move(inst)};
  });
}

cg_status cg_instance_to_json(const cg_instance* inst, char** out_json) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out_json, "out_json");
    *out_json = copy_string(coregauge::dump_canonical(coregauge::instance_to_json(inst->rep)));
  });
}

void cg_instance_free(cg_instance* inst) { delete inst; }

cg_game_kind cg_instance_kind(const cg_instance* inst) {
  return inst->rep.kind == coregauge::GameKind::Matching ? CG_GAME_MATCHING : CG_GAME_MST;
}

size_t cg_instance_num_agents(const cg_instance* inst) { return static_cast<size_t>(inst->rep.num_agents); }

size_t cg_instance_num_edges(const cg_instance* inst) { return inst->rep.num_edges(); }

double cg_instance_weight(const cg_instance* inst, size_t edge_id) {
  return edge_id < inst->rep.weights.size() ? inst->rep.weights[edge_id] : std::nan("");
}

cg_status cg_instance_perturb(const cg_instance* inst, size_t edge_id, double delta, cg_instance** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    auto w = coregauge::perturb(inst->rep.weights, static_cast<int>(edge_id), delta);
    *out = new cg_instance{inst->rep.with_weights(std::move(w))};
  });
}

cg_status cg_validate_json(const char* json_text, char** out_violations) {
  return guarded([&] {
    require_non_null(json_text, "json_text");
    require_non_null(out_violations, "out_violations");
    const auto inst = coregauge::instance_from_string(json_text);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : coregauge::validate_instance(inst)) {
      arr.push_back({{"message", v.message},
                     {"edge", v.edge_id ? nlohmann::json(*v.edge_id) : nlohmann::json(nullptr)},
                     {"vertex", v.vertex ? nlohmann::json(*v.vertex) : nlohmann::json(nullptr)}});
    }
    *out_violations = copy_string(coregauge::dump_canonical(arr));
  });
}

cg_status cg_generate(const char* generator, cg_game_kind kind, int n, double delta, uint64_t seed,
                      double edge_prob, double w_max, cg_instance** out_first, cg_instance** out_second) {
  return guarded([&] {
    require_non_null(generator, "generator");
    require_non_null(out_first, "out_first");
    coregauge::InstanceSpec spec;
    spec.generator = generator;
    spec.kind = kind == CG_GAME_MST ? coregauge::GameKind::MinSpanningTree : coregauge::GameKind::Matching;
    spec.n = n;
    spec.delta = delta;
    spec.seed = seed;
    spec.edge_prob = edge_prob;
    spec.w_max = w_max;
    auto made = coregauge::generate(spec);
    *out_first = new cg_instance{std::move(made.front())};
    if (out_second != nullptr) *out_second = made.size() > 1 ? new cg_instance{std::move(made[1])} : nullptr;
  });
}

cg_vector* cg_vector_from_array(const double* values, size_t size) {
  try {
    return wrap(coregauge::Allocation(std::vector<double>(values, values + size)));
  } catch (const std::bad_alloc&) {
    return nullptr;
  }
}

size_t cg_vector_size(const cg_vector* v) { return v->rep.size(); }

const double* cg_vector_data(const cg_vector* v) { return v->rep.values().data(); }

void cg_vector_free(cg_vector* v) { delete v; }

cg_status cg_char_value(const cg_instance* inst, uint64_t coalition, double* out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    *out = coregauge::char_value(inst->rep, coalition);
  });
}

cg_status cg_allocate_matching(const cg_instance* inst, double epsilon, cg_vector** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    *out = wrap(coregauge::theorem1_allocate(inst->rep, inst->rep.weights, epsilon));
  });
}

cg_status cg_allocate_mst(const cg_instance* inst, cg_vector** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    *out = wrap(coregauge::theorem2_allocate(inst->rep, inst->rep.weights));
  });
}

cg_status cg_integrate_matching(const cg_instance* inst, double base, cg_vector** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    *out = wrap(coregauge::integrate_matching(inst->rep, inst->rep.weights, base));
  });
}

cg_status cg_integrate_mst(const cg_instance* inst, cg_vector** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    *out = wrap(coregauge::integrate_mst(inst->rep, inst->rep.weights));
  });
}

cg_status cg_auxiliary_tree_json(const cg_instance* inst, double offset, char** out_json) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out_json, "out_json");
    const auto rw = coregauge::round_weights_mst(inst->rep.weights, offset);
    const auto tree = coregauge::auxiliary_tree(inst->rep, rw.rounded);
    *out_json = copy_string(coregauge::dump_canonical(coregauge::tree_to_json(tree)));
  });
}

cg_status cg_shapley_exact(const cg_instance* inst, cg_vector** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    *out = wrap(coregauge::shapley_exact(inst->rep).values);
  });
}

cg_status cg_shapley_sample(const cg_instance* inst, uint64_t permutations, uint64_t seed, cg_vector** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    *out = wrap(coregauge::shapley_sample(inst->rep, inst->rep.weights, permutations, seed).values);
  });
}

cg_status cg_exact_core_solve(const cg_instance* inst, cg_vector** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(out, "out");
    auto x = coregauge::exact_core_solve(inst->rep);
    if (!x) throw coregauge::Error(coregauge::ErrorCode::Infeasible, "the core is empty");
    *out = wrap(std::move(*x));
  });
}

cg_status cg_core_check(const cg_instance* inst, const double* allocation, size_t size, double alpha,
                        double tolerance, double grand_tolerance, cg_core_report** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(allocation, "allocation");
    require_non_null(out, "out");
    const coregauge::Allocation x(std::vector<double>(allocation, allocation + size));
    *out = new cg_core_report{coregauge::core_check(inst->rep, x, alpha, tolerance, grand_tolerance),
                              inst->rep.num_agents};
  });
}

int cg_core_report_passed(const cg_core_report* report) { return report->rep.pass ? 1 : 0; }

double cg_core_report_worst_slack(const cg_core_report* report) { return report->rep.worst_slack; }

cg_status cg_core_report_json(const cg_core_report* report, char** out_json) {
  return guarded([&] {
    require_non_null(report, "report");
    require_non_null(out_json, "out_json");
    *out_json = copy_string(coregauge::dump_canonical(coregauge::to_json(report->rep, report->num_agents)));
  });
}

cg_status cg_core_report_csv(const cg_core_report* report, char** out_csv) {
  return guarded([&] {
    require_non_null(report, "report");
    require_non_null(out_csv, "out_csv");
    *out_csv = copy_string(coregauge::to_csv(report->rep, report->num_agents));
  });
}

void cg_core_report_free(cg_core_report* report) { delete report; }

cg_status cg_lipschitz_scan(const cg_instance* inst, const char* allocator, double bound, double tolerance,
                            cg_lipschitz_report** out) {
  return guarded([&] {
    require_non_null(inst, "inst");
    require_non_null(allocator, "allocator");
    require_non_null(out, "out");
    const auto spec = coregauge::AllocatorSpec::parse(allocator);
    if (std::isnan(bound)) {
      const auto proven = coregauge::default_lipschitz_bound(spec, inst->rep.kind);
      if (!proven) {
        throw coregauge::Error(coregauge::ErrorCode::InvalidArgument,
                               "allocator " + spec.name() + " has no proven bound; pass one explicitly");
      }
      bound = *proven;
    }
    *out = new cg_lipschitz_report{coregauge::lipschitz_scan(spec, inst->rep, bound, tolerance)};
  });
}

cg_status cg_lipschitz_default_bound(const char* allocator, cg_game_kind kind, double* out) {
  return guarded([&] {
    require_non_null(allocator, "allocator");
    require_non_null(out, "out");
    const auto spec = coregauge::AllocatorSpec::parse(allocator);
    const auto proven = coregauge::default_lipschitz_bound(
        spec, kind == CG_GAME_MST ? coregauge::GameKind::MinSpanningTree : coregauge::GameKind::Matching);
    if (!proven) {
      throw coregauge::Error(coregauge::ErrorCode::InvalidArgument, "allocator " + spec.name() + " has no proven bound");
    }
    *out = *proven;
  });
}

int cg_lipschitz_report_passed(const cg_lipschitz_report* report) { return report->rep.pass ? 1 : 0; }

double cg_lipschitz_report_max_ratio(const cg_lipschitz_report* report) { return report->rep.max_ratio; }

cg_status cg_lipschitz_report_json(const cg_lipschitz_report* report, char** out_json) {
  return guarded([&] {
    require_non_null(report, "report");
    require_non_null(out_json, "out_json");
    *out_json = copy_string(coregauge::dump_canonical(coregauge::to_json(report->rep)));
  });
}

cg_status cg_lipschitz_report_csv(const cg_lipschitz_report* report, char** out_csv) {
  return guarded([&] {
    require_non_null(report, "report");
    require_non_null(out_csv, "out_csv");
    *out_csv = copy_string(coregauge::to_csv(report->rep));
  });
}

void cg_lipschitz_report_free(cg_lipschitz_report* report) { delete report; }

}  // extern "C"
