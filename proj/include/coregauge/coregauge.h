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

/*
 * C interface to the coregauge library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a cg_status; on
 * failure cg_last_error() describes the problem for the calling thread until
 * the next failing call. Strings returned through char** out-parameters are
 * NUL-terminated, heap-allocated and released with cg_string_free.
 */
#ifndef COREGAUGE_COREGAUGE_H
#define COREGAUGE_COREGAUGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COREGAUGE_BUILDING_LIBRARY)
#    define CG_API __declspec(dllexport)
#  else
#    define CG_API __declspec(dllimport)
#  endif
#else
#  define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_INVALID_ARGUMENT = 1,
  CG_ERR_PARSE = 2,
  CG_ERR_SIZE = 3,
  CG_ERR_KIND_MISMATCH = 4,
  CG_ERR_INFEASIBLE = 5,
  CG_ERR_INTERNAL = 6
} cg_status;

typedef enum cg_game_kind { CG_GAME_MATCHING = 0, CG_GAME_MST = 1 } cg_game_kind;

/* Root vertex id used in edge endpoints of spanning tree games. */
#define CG_ROOT_VERTEX (-1)

typedef struct cg_instance cg_instance;
typedef struct cg_vector cg_vector;
typedef struct cg_core_report cg_core_report;
typedef struct cg_lipschitz_report cg_lipschitz_report;

CG_API const char* cg_last_error(void);
CG_API const char* cg_version(void);
CG_API void cg_string_free(char* s);

/* Worker count for subset and interval loops (>= 1). */
CG_API void cg_set_threads(int threads);

/* ---- instances ---------------------------------------------------------- */

/* Parses and validates the instance JSON schema. */
CG_API cg_status cg_instance_from_json(const char* json_text, cg_instance** out);
CG_API cg_status cg_instance_to_json(const cg_instance* inst, char** out_json);
CG_API void cg_instance_free(cg_instance* inst);

CG_API cg_game_kind cg_instance_kind(const cg_instance* inst);
CG_API size_t cg_instance_num_agents(const cg_instance* inst);
CG_API size_t cg_instance_num_edges(const cg_instance* inst);
CG_API double cg_instance_weight(const cg_instance* inst, size_t edge_id);

/* Copy of inst with weight[edge_id] raised by delta > 0. */
CG_API cg_status cg_instance_perturb(const cg_instance* inst, size_t edge_id, double delta, cg_instance** out);

/* Violations of a possibly malformed instance as a JSON array of
 * {"message": str, "edge": int|null, "vertex": int|null}; "[]" when valid.
 * Only schema errors fail. */
CG_API cg_status cg_validate_json(const char* json_text, char** out_violations);

/* generator: "path" | "example1" | "theorem3" | "random". Pair generators
 * write the perturbed copy to out_second when it is non-NULL. kind applies to
 * "random" only. */
CG_API cg_status cg_generate(const char* generator, cg_game_kind kind, int n, double delta, uint64_t seed,
                             double edge_prob, double w_max, cg_instance** out_first, cg_instance** out_second);

/* ---- vectors ------------------------------------------------------------ */

CG_API cg_vector* cg_vector_from_array(const double* values, size_t size);
CG_API size_t cg_vector_size(const cg_vector* v);
CG_API const double* cg_vector_data(const cg_vector* v);
CG_API void cg_vector_free(cg_vector* v);

/* ---- characteristic function -------------------------------------------- */

/* nu(S) with S an agent bitmask; at most 64 agents. */
CG_API cg_status cg_char_value(const cg_instance* inst, uint64_t coalition, double* out);

/* ---- allocators --------------------------------------------------------- */

/* (1/2 - epsilon)-approximate core allocation of a matching game. */
CG_API cg_status cg_allocate_matching(const cg_instance* inst, double epsilon, cg_vector** out);
/* 4-approximate core allocation of a spanning tree game. */
CG_API cg_status cg_allocate_mst(const cg_instance* inst, cg_vector** out);
/* Un-normalized integrals over the rounding offset. */
CG_API cg_status cg_integrate_matching(const cg_instance* inst, double base, cg_vector** out);
CG_API cg_status cg_integrate_mst(const cg_instance* inst, cg_vector** out);

/* Auxiliary tree of a spanning tree game at rounding offset b in [0, 1]:
 * {"nodes":[{"id":int,"h":float,"children":[int],"leaf":int|null}]} */
CG_API cg_status cg_auxiliary_tree_json(const cg_instance* inst, double offset, char** out_json);

/* ---- Shapley value ------------------------------------------------------ */

CG_API cg_status cg_shapley_exact(const cg_instance* inst, cg_vector** out);
CG_API cg_status cg_shapley_sample(const cg_instance* inst, uint64_t permutations, uint64_t seed,
                                   cg_vector** out);

/* ---- verification ------------------------------------------------------- */

/* Core point by exact feasibility; CG_ERR_INFEASIBLE when the core is empty. */
CG_API cg_status cg_exact_core_solve(const cg_instance* inst, cg_vector** out);

CG_API cg_status cg_core_check(const cg_instance* inst, const double* allocation, size_t size, double alpha,
                               double tolerance, double grand_tolerance, cg_core_report** out);
CG_API int cg_core_report_passed(const cg_core_report* report);
CG_API double cg_core_report_worst_slack(const cg_core_report* report);
CG_API cg_status cg_core_report_json(const cg_core_report* report, char** out_json);
CG_API cg_status cg_core_report_csv(const cg_core_report* report, char** out_csv);
CG_API void cg_core_report_free(cg_core_report* report);

/* allocator: theorem1[:eps] | theorem2 | shapley_exact |
 * raw_integrate_matching[:alpha] | raw_integrate_mst | exact_core_solve.
 * A NaN bound selects the allocator's proven constant, or fails with
 * CG_ERR_INVALID_ARGUMENT when it has none. */
CG_API cg_status cg_lipschitz_scan(const cg_instance* inst, const char* allocator, double bound, double tolerance,
                                   cg_lipschitz_report** out);
/* Proven Lipschitz constant of the allocator for the game kind;
 * CG_ERR_INVALID_ARGUMENT when none is known. */
CG_API cg_status cg_lipschitz_default_bound(const char* allocator, cg_game_kind kind, double* out);
CG_API int cg_lipschitz_report_passed(const cg_lipschitz_report* report);
CG_API double cg_lipschitz_report_max_ratio(const cg_lipschitz_report* report);
CG_API cg_status cg_lipschitz_report_json(const cg_lipschitz_report* report, char** out_json);
CG_API cg_status cg_lipschitz_report_csv(const cg_lipschitz_report* report, char** out_csv);
CG_API void cg_lipschitz_report_free(cg_lipschitz_report* report);

#ifdef __cplusplus
}
#endif

#endif /* COREGAUGE_COREGAUGE_H */
