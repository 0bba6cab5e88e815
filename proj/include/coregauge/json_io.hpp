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

#pragma once

#include <string>

#include "coregauge/game.hpp"
#include "json.hpp"

namespace coregauge {

/// Parses the instance schema
///   {"kind": "matching"|"mst", "n": int,
///    "edges": [{"id": int, "u": int, "v": int, "w": float}]}
/// where vertex -1 denotes the root of an "mst" instance. Edges are reordered
/// by id. Schema errors throw Error(Parse); graph-level problems are left to
/// validate_instance.
GameInstance instance_from_json(const nlohmann::json& j);
GameInstance instance_from_string(const std::string& text);

nlohmann::json instance_to_json(const GameInstance& inst);

/// {"0": x0, "1": x1, ...}
nlohmann::json allocation_to_json(const Allocation& x);

/// Accepts either the object form above or a plain array.
Allocation allocation_from_json(const nlohmann::json& j, int num_agents);

/// Canonical output: sorted keys, shortest round-trip doubles.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace coregauge
