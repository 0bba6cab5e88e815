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

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace coregauge::detail {

/// A point y >= 0 with rows[i] . y <= rhs[i] for every i, found by the
/// auxiliary-variable (phase one) simplex method in dictionary form over exact
/// rationals with Bland's rule; nullopt when no such point exists.
std::optional<std::vector<mpq_class>> find_feasible_point(const std::vector<std::vector<mpq_class>>& rows,
                                                          const std::vector<mpq_class>& rhs);

}  // namespace coregauge::detail
