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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = COREGAUGE_CLI_PATH;
const fs::path kGolden = COREGAUGE_GOLDEN_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "coregauge_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("gen output matches the golden files byte for byte") {
  CHECK(run("gen path -n 5").out == slurp(kGolden / "path5.json"));
  CHECK(run("gen example1 -n 5").out == slurp(kGolden / "example1_n5.json"));
  CHECK(run("gen random --kind mst -n 4 --seed 7").out == slurp(kGolden / "random_mst_n4_seed7.json"));

  const auto base = scratch("t3_base.json");
  const auto moved = scratch("t3_moved.json");
  REQUIRE(run("gen theorem3 -n 5 --delta 0.1 -o " + q(base) + " --second-output " + q(moved)).code == 0);
  CHECK(slurp(base) == slurp(kGolden / "theorem3_n5_base.json"));
  CHECK(slurp(moved) == slurp(kGolden / "theorem3_n5_moved.json"));
}

TEST_CASE("instances survive a parse and re-emit") {
  const auto copy = scratch("path5_copy.json");
  REQUIRE(run("gen path -n 5 -o " + q(copy)).code == 0);
  CHECK(slurp(copy) == slurp(kGolden / "path5.json"));
}

TEST_CASE("allocate feeds core-check") {
  const auto alloc = scratch("path5_alloc.json");
  const auto r = run("allocate " + q(kGolden / "path5.json") + " --epsilon 0.25");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("alpha").get<double>() == 0.25);
  CHECK(j.at("grand_value").get<double>() == 2.0);
  double sum = 0.0;
  for (const auto& [k, v] : j.at("allocation").items()) sum += v.get<double>();
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-12));
  std::ofstream(alloc) << r.out;

  const auto ok = run("core-check " + q(kGolden / "path5.json") + " " + q(alloc) + " --alpha 0.25");
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out).at("pass") == true);
  // The same point is not in the exact core of the path.
  CHECK(run("core-check " + q(kGolden / "path5.json") + " " + q(alloc) + " --alpha 1").code == 1);

  const auto tree = run("allocate " + q(kGolden / "random_mst_n4_seed7.json"));
  REQUIRE(tree.code == 0);
  const auto tree_alloc = scratch("mst_alloc.json");
  std::ofstream(tree_alloc) << tree.out;
  CHECK(run("core-check " + q(kGolden / "random_mst_n4_seed7.json") + " " + q(tree_alloc) + " --alpha 4").code == 0);
}

TEST_CASE("shapley and lipschitz subcommands") {
  const auto s = run("shapley " + q(kGolden / "theorem3_n5_base.json"));
  REQUIRE(s.code == 0);
  const auto values = nlohmann::json::parse(s.out).at("values");
  CHECK(values.at("0").get<double>() == doctest::Approx(13.0 / 60.0).epsilon(1e-12));
  CHECK(values.at("2").get<double>() == doctest::Approx(0.3).epsilon(1e-12));

  const auto l = run("lipschitz " + q(kGolden / "path5.json") + " --allocator theorem1:0.25");
  CHECK(l.code == 0);
  CHECK(l.out.find("\"pass\":true") != std::string::npos);
  CHECK(run("lipschitz " + q(kGolden / "path5.json") + " --allocator theorem1:0.25 --bound 0").code == 1);
  const auto csv = scratch("probes.csv");
  CHECK(run("lipschitz " + q(kGolden / "random_mst_n4_seed7.json") + " --allocator theorem2 --csv " + q(csv)).code == 0);
  CHECK(slurp(csv).rfind("edge_id,w_e,delta,ratio\n", 0) == 0);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("allocate /nonexistent/instance.json").code == 2);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"kind":"matching","n":2,"edges":[{"id":0,"u":0,"v":9,"w":1.0}]})";
  CHECK(run("allocate " + q(bad) + " --epsilon 0.25").code == 2);
  std::ofstream(scratch("garbage.json")) << "{";
  CHECK(run("shapley " + q(scratch("garbage.json"))).code == 2);
  CHECK(run("allocate " + q(kGolden / "path5.json") + " --epsilon 0.9").code == 2);
  CHECK(run("lipschitz " + q(kGolden / "path5.json") + " --allocator nope").code == 2);
  CHECK(run("gen example1 -n 4").code == 2);
  CHECK(run("no-such-command").code != 0);
}

TEST_CASE("allocate examples") {
  const auto edge = scratch("edge.json");
  std::ofstream(edge) << R"({"kind":"matching","n":2,"edges":[{"id":0,"u":0,"v":1,"w":1.0}]})";
  auto j = nlohmann::json::parse(run("allocate " + q(edge) + " --epsilon 0.25").out);
  CHECK(j.at("allocation").at("0").get<double>() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(j.at("allocation").at("1").get<double>() == doctest::Approx(0.5).epsilon(1e-15));

  const auto single = scratch("single.json");
  std::ofstream(single) << R"({"kind":"mst","n":1,"edges":[{"id":0,"u":-1,"v":0,"w":1.0}]})";
  j = nlohmann::json::parse(run("allocate " + q(single)).out);
  CHECK(j.at("allocation").at("0").get<double>() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(j.at("grand_value").get<double>() == 1.0);
  CHECK(run("allocate " + q(single) + " --game matching").code == 2);

  const auto pair = scratch("example1.json");
  REQUIRE(run("gen example1 -n 5 -o " + q(pair)).code == 0);
  j = nlohmann::json::parse(run("allocate " + q(pair) + " --epsilon 0.1").out);
  double sum = 0.0;
  for (const auto& [k, v] : j.at("allocation").items()) sum += v.get<double>();
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-12));
}
