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

#include "exact_lp.hpp"

#include <cstddef>

namespace coregauge::detail {

namespace {

// x_basic[i] = constant[i] + sum_j coef[i][j] * x_nonbasic[j]
// objective  = obj_constant + sum_j obj[j] * x_nonbasic[j]
class Dictionary {
 public:
  Dictionary(const std::vector<std::vector<mpq_class>>& rows, const std::vector<mpq_class>& rhs,
             std::size_t num_vars)
      : num_vars_(num_vars),
        constant_(rhs),
        coef_(rows.size(), std::vector<mpq_class>(num_vars + 1)),
        obj_(num_vars + 1),
        basic_(rows.size()),
        nonbasic_(num_vars + 1) {
    // Variables: 0..n-1 are y, n is the auxiliary x0, n+1+i is the slack of row i.
    for (std::size_t j = 0; j <= num_vars; ++j) nonbasic_[j] = j;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      basic_[i] = num_vars + 1 + i;
      for (std::size_t j = 0; j < num_vars; ++j) coef_[i][j] = -rows[i][j];
      coef_[i][num_vars] = 1;
    }
    obj_[num_vars] = -1;
  }

  bool solve() {
    std::size_t worst = constant_.size();
    for (std::size_t i = 0; i < constant_.size(); ++i) {
      if (constant_[i] < 0 && (worst == constant_.size() || constant_[i] < constant_[worst])) worst = i;
    }
    if (worst == constant_.size()) return true;  // y = 0 is feasible
    pivot(worst, num_vars_);

    for (;;) {
      std::size_t enter = obj_.size();
      for (std::size_t j = 0; j < obj_.size(); ++j) {
        if (obj_[j] > 0 && (enter == obj_.size() || nonbasic_[j] < nonbasic_[enter])) enter = j;
      }
      if (enter == obj_.size()) break;

      std::size_t leave = constant_.size();
      mpq_class best_ratio;
      for (std::size_t i = 0; i < constant_.size(); ++i) {
        if (coef_[i][enter] >= 0) continue;
        mpq_class ratio = constant_[i] / -coef_[i][enter];
        if (leave == constant_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      // The phase-one objective is bounded by 0, so a leaving row always exists.
      pivot(leave, enter);
    }
    return obj_constant_ == 0;
  }

  std::vector<mpq_class> point() const {
    std::vector<mpq_class> y(num_vars_);
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (basic_[i] < num_vars_) y[basic_[i]] = constant_[i];
    }
    return y;
  }

 private:
  void pivot(std::size_t leave, std::size_t enter) {
    auto& row = coef_[leave];
    const mpq_class a = row[enter];
    // Solve the leaving row for the entering variable.
    constant_[leave] = -constant_[leave] / a;
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] = j == enter ? mpq_class(1 / a) : mpq_class(-row[j] / a);
    }
    const auto substitute = [&](std::vector<mpq_class>& target, mpq_class& target_constant) {
      const mpq_class c = target[enter];
      if (c == 0) return;
      target_constant += c * constant_[leave];
      for (std::size_t j = 0; j < target.size(); ++j) {
        if (j == enter) {
          target[j] = c * row[j];
        } else if (row[j] != 0) {
          target[j] += c * row[j];
        }
      }
    };
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (i != leave) substitute(coef_[i], constant_[i]);
    }
    substitute(obj_, obj_constant_);
    std::swap(basic_[leave], nonbasic_[enter]);
  }

  std::size_t num_vars_;
  std::vector<mpq_class> constant_;
  std::vector<std::vector<mpq_class>> coef_;
  std::vector<mpq_class> obj_;
  mpq_class obj_constant_ = 0;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

}  // namespace

std::optional<std::vector<mpq_class>> find_feasible_point(const std::vector<std::vector<mpq_class>>& rows,
                                                          const std::vector<mpq_class>& rhs) {
  const std::size_t num_vars = rows.empty() ? 0 : rows.front().size();
  Dictionary dict(rows, rhs, num_vars);
  if (!dict.solve()) return std::nullopt;
  return dict.point();
}

}  // namespace coregauge::detail
