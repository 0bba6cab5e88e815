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

// coregauge command-line front end. Talks to the library only through the C
// interface in coregauge/coregauge.h.
//
// Exit codes: 0 ok, 1 a verification report failed, 2 bad input.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coregauge/coregauge.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Status from the library: input problems map to exit 2, everything else is
// rethrown as a plain runtime error.
void check(cg_status status, const std::string& context) {
  if (status == CG_OK) return;
  const std::string msg = context + ": " + cg_last_error();
  if (status == CG_ERR_INTERNAL) throw std::runtime_error(msg);
  throw InputError(msg);
}

struct InstanceDeleter {
  void operator()(cg_instance* p) const { cg_instance_free(p); }
};
struct VectorDeleter {
  void operator()(cg_vector* p) const { cg_vector_free(p); }
};
struct CoreReportDeleter {
  void operator()(cg_core_report* p) const { cg_core_report_free(p); }
};
struct LipschitzReportDeleter {
  void operator()(cg_lipschitz_report* p) const { cg_lipschitz_report_free(p); }
};
using InstancePtr = std::unique_ptr<cg_instance, InstanceDeleter>;
using VectorPtr = std::unique_ptr<cg_vector, VectorDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  cg_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text << '\n';
}

InstancePtr load_instance(const std::string& path) {
  cg_instance* raw = nullptr;
  check(cg_instance_from_json(read_file(path).c_str(), &raw), path);
  return InstancePtr(raw);
}

std::string instance_text(const cg_instance* inst) {
  char* s = nullptr;
  check(cg_instance_to_json(inst, &s), "serialize");
  return take_string(s);
}

uint64_t grand_mask(const cg_instance* inst) {
  const size_t n = cg_instance_num_agents(inst);
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

json vector_json(const cg_vector* v) {
  json out = json::object();
  const double* data = cg_vector_data(v);
  for (size_t i = 0; i < cg_vector_size(v); ++i) out[std::to_string(i)] = data[i];
  return out;
}

// Accepts an `allocate` payload, a {"0": x0, ...} map, or a plain array.
std::vector<double> parse_allocation(const std::string& text, size_t n) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("allocation: ") + e.what());
  }
  if (j.is_object() && j.contains("allocation")) j = j["allocation"];
  if (j.is_object() && j.contains("values")) j = j["values"];
  std::vector<double> x(n, std::numeric_limits<double>::quiet_NaN());
  if (j.is_array()) {
    if (j.size() != n) throw InputError("allocation: expected " + std::to_string(n) + " entries");
    for (size_t i = 0; i < n; ++i) {
      if (!j[i].is_number()) throw InputError("allocation: non-numeric entry");
      x[i] = j[i].get<double>();
    }
    return x;
  }
  if (!j.is_object()) throw InputError("allocation: expected an object or array");
  if (j.size() != n) throw InputError("allocation: expected " + std::to_string(n) + " entries");
  for (size_t i = 0; i < n; ++i) {
    const auto it = j.find(std::to_string(i));
    if (it == j.end() || !it->is_number()) throw InputError("allocation: missing agent " + std::to_string(i));
    x[i] = it->get<double>();
  }
  return x;
}

void emit(const json& payload) { std::cout << payload.dump() << '\n'; }

// ---------------------------------------------------------------------------

struct AllocateArgs {
  std::string instance;
  std::string game = "auto";
  std::optional<double> epsilon;
  std::string dump_tree;
  double tree_offset = 0.5;
};

int run_allocate(const AllocateArgs& a) {
  const auto inst = load_instance(a.instance);
  const cg_game_kind kind = cg_instance_kind(inst.get());
  if (a.game != "auto") {
    const cg_game_kind want = a.game == "mst" ? CG_GAME_MST : CG_GAME_MATCHING;
    if (want != kind) throw InputError("--game " + a.game + " does not match the instance kind");
  }

  cg_vector* raw = nullptr;
  double alpha = 0.0;
  double bound = 0.0;
  if (kind == CG_GAME_MATCHING) {
    if (!a.epsilon) throw InputError("--epsilon is required for matching games");
    check(cg_allocate_matching(inst.get(), *a.epsilon, &raw), "allocate");
    alpha = 0.5 - *a.epsilon;
    std::ostringstream name;
    name.precision(17);
    name << "theorem1:" << *a.epsilon;
    check(cg_lipschitz_default_bound(name.str().c_str(), kind, &bound), "bound");
  } else {
    check(cg_allocate_mst(inst.get(), &raw), "allocate");
    alpha = 4.0;
    check(cg_lipschitz_default_bound("theorem2", kind, &bound), "bound");
  }
  const VectorPtr x(raw);

  double grand = 0.0;
  check(cg_char_value(inst.get(), grand_mask(inst.get()), &grand), "grand value");

  if (!a.dump_tree.empty()) {
    if (kind != CG_GAME_MST) throw InputError("--dump-tree applies to mst instances only");
    char* tree = nullptr;
    check(cg_auxiliary_tree_json(inst.get(), a.tree_offset, &tree), "auxiliary tree");
    write_file(a.dump_tree, take_string(tree));
  }

  emit({{"allocation", vector_json(x.get())},
        {"grand_value", grand},
        {"alpha", alpha},
        {"lipschitz_bound", bound}});
  std::cerr << "allocated " << cg_vector_size(x.get()) << " agents, grand value " << grand << '\n';
  return kExitOk;
}

struct CoreCheckArgs {
  std::string instance;
  std::string allocation;
  std::optional<double> alpha;
  double tolerance = 1e-6;
  double grand_tolerance = 1e-9;
  std::string csv;
};

int run_core_check(const CoreCheckArgs& a) {
  const auto inst = load_instance(a.instance);
  const auto x = parse_allocation(read_file(a.allocation), cg_instance_num_agents(inst.get()));
  const double alpha = a.alpha ? *a.alpha : 1.0;
  cg_core_report* raw = nullptr;
  check(cg_core_check(inst.get(), x.data(), x.size(), alpha, a.tolerance, a.grand_tolerance, &raw), "core-check");
  const std::unique_ptr<cg_core_report, CoreReportDeleter> report(raw);

  char* text = nullptr;
  check(cg_core_report_json(report.get(), &text), "report");
  std::cout << take_string(text) << '\n';
  if (!a.csv.empty()) {
    char* csv = nullptr;
    check(cg_core_report_csv(report.get(), &csv), "report");
    write_file(a.csv, take_string(csv));
  }
  const bool pass = cg_core_report_passed(report.get()) != 0;
  std::cerr << (pass ? "PASS" : "FAIL") << " worst slack " << cg_core_report_worst_slack(report.get()) << '\n';
  return pass ? kExitOk : kExitFail;
}

struct ShapleyArgs {
  std::string instance;
  std::string method = "exact";
  uint64_t samples = 10000;
  uint64_t seed = 0;
};

int run_shapley(const ShapleyArgs& a) {
  const auto inst = load_instance(a.instance);
  cg_vector* raw = nullptr;
  json payload;
  if (a.method == "exact") {
    check(cg_shapley_exact(inst.get(), &raw), "shapley");
    payload = {{"method", "exact"}};
  } else {
    check(cg_shapley_sample(inst.get(), a.samples, a.seed, &raw), "shapley");
    payload = {{"method", "sample"}, {"samples", a.samples}, {"seed", a.seed}};
  }
  const VectorPtr s(raw);
  payload["values"] = vector_json(s.get());
  emit(payload);
  std::cerr << "shapley (" << a.method << ") for " << cg_vector_size(s.get()) << " agents\n";
  return kExitOk;
}

struct LipschitzArgs {
  std::string instance;
  std::string allocator;
  std::optional<double> bound;
  double tolerance = 1e-6;
  std::string csv;
};

int run_lipschitz(const LipschitzArgs& a) {
  const auto inst = load_instance(a.instance);
  cg_lipschitz_report* raw = nullptr;
  const double bound = a.bound ? *a.bound : std::nan("");
  check(cg_lipschitz_scan(inst.get(), a.allocator.c_str(), bound, a.tolerance, &raw), "lipschitz");
  const std::unique_ptr<cg_lipschitz_report, LipschitzReportDeleter> report(raw);

  char* text = nullptr;
  check(cg_lipschitz_report_json(report.get(), &text), "report");
  std::cout << take_string(text) << '\n';
  if (!a.csv.empty()) {
    char* csv = nullptr;
    check(cg_lipschitz_report_csv(report.get(), &csv), "report");
    write_file(a.csv, take_string(csv));
  }
  const bool pass = cg_lipschitz_report_passed(report.get()) != 0;
  std::cerr << (pass ? "PASS" : "FAIL") << " max ratio " << cg_lipschitz_report_max_ratio(report.get()) << '\n';
  return pass ? kExitOk : kExitFail;
}

struct GenArgs {
  std::string generator;
  std::string kind = "matching";
  int n = 5;
  double delta = 0.1;
  uint64_t seed = 0;
  double edge_prob = 0.5;
  double w_max = 10.0;
  std::string output;
  std::string second_output;
};

int run_gen(const GenArgs& a) {
  cg_instance* first = nullptr;
  cg_instance* second = nullptr;
  const cg_game_kind kind = a.kind == "mst" ? CG_GAME_MST : CG_GAME_MATCHING;
  check(cg_generate(a.generator.c_str(), kind, a.n, a.delta, a.seed, a.edge_prob, a.w_max, &first, &second),
        "gen");
  const InstancePtr base(first);
  const InstancePtr other(second);

  const std::string base_text = instance_text(base.get());
  if (other && !a.second_output.empty()) write_file(a.second_output, instance_text(other.get()));
  if (!a.output.empty()) {
    write_file(a.output, base_text);
  } else if (other && a.second_output.empty()) {
    // Both halves of a pair on stdout.
    emit(json::array({json::parse(base_text), json::parse(instance_text(other.get()))}));
  } else {
    std::cout << base_text << '\n';
  }
  std::cerr << "generated " << a.generator << " n=" << cg_instance_num_agents(base.get()) << '\n';
  return kExitOk;
}

int thread_count_from_env() {
  const char* env = std::getenv("COREGAUGE_THREADS");
  if (env == nullptr) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coregauge: Lipschitz approximate-core allocations for matching and spanning tree games"};
  app.set_version_flag("--version", std::string(cg_version()));
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: COREGAUGE_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  AllocateArgs alloc;
  auto* allocate = app.add_subcommand("allocate", "approximate core allocation of an instance");
  allocate->add_option("instance", alloc.instance, "instance JSON file")->required();
  allocate->add_option("--game", alloc.game, "expected game kind")
      ->check(CLI::IsMember({"auto", "matching", "mst"}));
  allocate->add_option("--epsilon", alloc.epsilon, "core slack for matching games, in (0, 0.5]");
  allocate->add_option("--dump-tree", alloc.dump_tree, "write the auxiliary tree JSON here (mst)");
  allocate->add_option("--tree-offset", alloc.tree_offset, "rounding offset b used for --dump-tree")
      ->check(CLI::Range(0.0, 1.0));

  CoreCheckArgs core;
  auto* core_cmd = app.add_subcommand("core-check", "verify an allocation against every coalition");
  core_cmd->add_option("instance", core.instance, "instance JSON file")->required();
  core_cmd->add_option("allocation", core.allocation, "allocation JSON file")->required();
  core_cmd->add_option("--alpha", core.alpha, "approximation factor (default 1)");
  core_cmd->add_option("--tol", core.tolerance, "coalition slack tolerance");
  core_cmd->add_option("--grand-tol", core.grand_tolerance, "efficiency tolerance");
  core_cmd->add_option("--csv", core.csv, "write one row per coalition here");

  ShapleyArgs shap;
  auto* shapley = app.add_subcommand("shapley", "Shapley value of an instance");
  shapley->add_option("instance", shap.instance, "instance JSON file")->required();
  shapley->add_option("--method", shap.method)->check(CLI::IsMember({"exact", "sample"}));
  shapley->add_option("--samples", shap.samples, "permutations for --method sample")->check(CLI::PositiveNumber);
  shapley->add_option("--seed", shap.seed);

  LipschitzArgs lip;
  auto* lipschitz = app.add_subcommand("lipschitz", "single-edge perturbation probe of an allocator");
  lipschitz->add_option("instance", lip.instance, "instance JSON file")->required();
  lipschitz->add_option("--allocator", lip.allocator,
                        "theorem1[:eps] | theorem2 | shapley_exact | raw_integrate_matching[:alpha] | "
                        "raw_integrate_mst | exact_core_solve")
      ->required();
  lipschitz->add_option("--bound", lip.bound, "claimed constant (default: the proven one)");
  lipschitz->add_option("--tol", lip.tolerance);
  lipschitz->add_option("--csv", lip.csv, "write one row per probe here");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("generator", gen.generator)
      ->required()
      ->check(CLI::IsMember({"path", "example1", "theorem3", "random"}));
  gen_cmd->add_option("--kind", gen.kind, "game kind for random")->check(CLI::IsMember({"matching", "mst"}));
  gen_cmd->add_option("-n,--n", gen.n, "number of agents");
  gen_cmd->add_option("--delta", gen.delta, "perturbation for theorem3");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--edge-prob", gen.edge_prob)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--w-max", gen.w_max);
  gen_cmd->add_option("-o,--output", gen.output, "instance file (default stdout)");
  gen_cmd->add_option("--second-output", gen.second_output, "perturbed instance of a pair generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  cg_set_threads(threads > 0 ? threads : thread_count_from_env());

  try {
    if (*allocate) return run_allocate(alloc);
    if (*core_cmd) return run_core_check(core);
    if (*shapley) return run_shapley(shap);
    if (*lipschitz) return run_lipschitz(lip);
    if (*gen_cmd) return run_gen(gen);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return kExitInput;
}
