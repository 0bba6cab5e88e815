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

#include "coregauge/json_io.hpp"

#include <algorithm>
#include <cmath>

namespace coregauge {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::Parse, "instance JSON: " + what);
}

int read_int(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) parse_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

GameInstance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) parse_error("top level must be an object");
  GameInstance inst;
  if (!j.contains("kind") || !j.at("kind").is_string()) parse_error("missing string field \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "matching") {
    inst.kind = GameKind::Matching;
  } else if (kind == "mst") {
    inst.kind = GameKind::MinSpanningTree;
  } else {
    parse_error("unknown kind \"" + kind + "\"");
  }
  inst.num_agents = read_int(j, "n");
  if (!j.contains("edges") || !j.at("edges").is_array()) parse_error("missing array field \"edges\"");

  struct Row {
    Edge e;
    double w;
  };
  std::vector<Row> rows;
  for (const auto& item : j.at("edges")) {
    if (!item.is_object()) parse_error("edge entries must be objects");
    Row row{{read_int(item, "id"), read_int(item, "u"), read_int(item, "v")}, 0.0};
    if (!item.contains("w") || !item.at("w").is_number()) parse_error("edge missing numeric \"w\"");
    row.w = item.at("w").get<double>();
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.e.id < b.e.id; });
  for (const auto& row : rows) {
    inst.edges.push_back(row.e);
    inst.weights.push_back(row.w);
  }
  return inst;
}

GameInstance instance_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(e.what());
  }
  return instance_from_json(j);
}

nlohmann::json instance_to_json(const GameInstance& inst) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const Edge& e = inst.edges[i];
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"w", inst.weights.at(i)}});
  }
  return {{"kind", to_string(inst.kind)}, {"n", inst.num_agents}, {"edges", std::move(edges)}};
}

nlohmann::json allocation_to_json(const Allocation& x) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t v = 0; v < x.size(); ++v) out[std::to_string(v)] = x[v];
  return out;
}

Allocation allocation_from_json(const nlohmann::json& j, int num_agents) {
  Allocation x(static_cast<std::size_t>(num_agents));
  if (j.is_array()) {
    if (j.size() != x.size()) {
      throw Error(ErrorCode::Parse, "allocation has " + std::to_string(j.size()) +
                                        " entries for " + std::to_string(num_agents) + " agents");
    }
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (!j[v].is_number()) throw Error(ErrorCode::Parse, "allocation entries must be numbers");
      x[v] = j[v].get<double>();
    }
    return x;
  }
  if (!j.is_object()) throw Error(ErrorCode::Parse, "allocation must be an object or an array");
  std::vector<bool> seen(x.size(), false);
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    int v = -1;
    try {
      v = std::stoi(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || v < 0 || v >= num_agents) {
      throw Error(ErrorCode::Parse, "allocation key \"" + key + "\" is not an agent id");
    }
    if (!value.is_number()) throw Error(ErrorCode::Parse, "allocation entries must be numbers");
    x[static_cast<std::size_t>(v)] = value.get<double>();
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::Parse, "allocation does not cover every agent");
  }
  return x;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(); }

}  // namespace coregauge
