// Copyright 2026 The robustflow Authors
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

// Exact reductions, applied until nothing changes:
//  - empty rows are dropped (or prove infeasibility);
//  - a row a x <= 0 with a >= 0 forces its columns to zero;
//  - a row a x <= b with a <= 0 and b >= 0 always holds;
//  - a column with nonpositive cost that only tightens <= rows can be zero;
//  - identical rows are merged.
// Removed columns are zero in the postsolved point, so an optimum of the
// reduced program extends to an optimum of the original one.

#include <algorithm>
#include <map>

#include "lp/internal.h"

namespace robustflow::lp::internal {

namespace {

struct Work {
  std::vector<Row> rows;
  std::vector<bool> row_active;
  std::vector<bool> fixed;
  std::vector<std::vector<int>> col_rows;
  bool infeasible = false;

  void Fix(int j) { fixed[j] = true; }

  void Compact(Row& row) {
    std::erase_if(row.entries, [this](const auto& e) { return fixed[e.first]; });
  }
};

// Returns true when something changed.
bool ReduceRow(Work& w, int r) {
  Row& row = w.rows[r];
  const size_t before = row.entries.size();
  w.Compact(row);
  bool changed = row.entries.size() != before;
  bool any_pos = false, any_neg = false;
  for (const auto& [col, coef] : row.entries) {
    if (coef > 0) any_pos = true;
    if (coef < 0) any_neg = true;
  }
  const int rhs_sign = sgn(row.rhs);
  auto drop = [&] {
    w.row_active[r] = false;
    return true;
  };
  auto force_all = [&] {
    for (const auto& e : row.entries) w.Fix(e.first);
    return drop();
  };
  if (row.relation == Relation::kLessEqual) {
    if (!any_pos && !any_neg) {
      if (rhs_sign < 0) w.infeasible = true;
      return drop();
    }
    if (!any_neg) {
      if (rhs_sign < 0) {
        w.infeasible = true;
        return true;
      }
      if (rhs_sign == 0) return force_all();
    }
    if (!any_pos && rhs_sign >= 0) return drop();
  } else {
    if (!any_pos && !any_neg) {
      if (rhs_sign != 0) w.infeasible = true;
      return drop();
    }
    if (!any_neg || !any_pos) {
      const int coef_sign = any_pos ? 1 : -1;
      if (rhs_sign == 0) return force_all();
      if (rhs_sign != coef_sign) {
        w.infeasible = true;
        return true;
      }
    }
  }
  return changed;
}

const Rational* CoefIn(const Row& row, int col) {
  auto it = std::lower_bound(
      row.entries.begin(), row.entries.end(), col,
      [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
  if (it == row.entries.end() || it->first != col) return nullptr;
  return &it->second;
}

bool MergeDuplicates(Work& w) {
  bool changed = false;
  std::map<std::pair<int, std::vector<std::pair<int, Rational>>>, int> seen;
  for (int r = 0; r < static_cast<int>(w.rows.size()); ++r) {
    if (!w.row_active[r]) continue;
    Row& row = w.rows[r];
    w.Compact(row);
    auto key = std::make_pair(static_cast<int>(row.relation), row.entries);
    auto [it, inserted] = seen.emplace(std::move(key), r);
    if (inserted) continue;
    Row& kept = w.rows[it->second];
    if (row.relation == Relation::kLessEqual) {
      if (row.rhs < kept.rhs) kept.rhs = row.rhs;
    } else if (row.rhs != kept.rhs) {
      w.infeasible = true;
    }
    w.row_active[r] = false;
    changed = true;
  }
  return changed;
}

}  // namespace

PresolveResult Presolve(const CanonicalLp& lp) {
  Work w;
  w.rows.reserve(lp.rows.size());
  for (const Row& original : lp.rows) {
    Row row = original;
    if (row.relation == Relation::kGreaterEqual) {
      for (auto& e : row.entries) e.second = -e.second;
      row.rhs = -row.rhs;
      row.relation = Relation::kLessEqual;
    }
    w.rows.push_back(std::move(row));
  }
  w.row_active.assign(w.rows.size(), true);
  w.fixed.assign(lp.num_columns, false);
  w.col_rows.resize(lp.num_columns);
  for (int r = 0; r < static_cast<int>(w.rows.size()); ++r) {
    for (const auto& e : w.rows[r].entries) w.col_rows[e.first].push_back(r);
  }

  bool changed = true;
  while (changed && !w.infeasible) {
    changed = false;
    for (int r = 0; r < static_cast<int>(w.rows.size()) && !w.infeasible; ++r) {
      if (w.row_active[r] && ReduceRow(w, r)) changed = true;
    }
    for (int j = 0; j < lp.num_columns && !w.infeasible; ++j) {
      if (w.fixed[j] || lp.cost[j] > 0) continue;
      bool blocked = false;
      for (int r : w.col_rows[j]) {
        if (!w.row_active[r]) continue;
        const Row& row = w.rows[r];
        const Rational* coef = CoefIn(row, j);
        if (coef == nullptr) continue;
        if (row.relation == Relation::kEqual || *coef < 0) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        w.Fix(j);
        changed = true;
      }
    }
    if (!w.infeasible && MergeDuplicates(w)) changed = true;
  }

  PresolveResult result;
  result.infeasible = w.infeasible;
  if (w.infeasible) return result;
  std::vector<int> new_index(lp.num_columns, -1);
  for (int j = 0; j < lp.num_columns; ++j) {
    if (w.fixed[j]) continue;
    new_index[j] = static_cast<int>(result.kept_columns.size());
    result.kept_columns.push_back(j);
    result.reduced.cost.push_back(lp.cost[j]);
  }
  result.reduced.num_columns = static_cast<int>(result.kept_columns.size());
  for (int r = 0; r < static_cast<int>(w.rows.size()); ++r) {
    if (!w.row_active[r]) continue;
    Row row = std::move(w.rows[r]);
    w.Compact(row);
    for (auto& e : row.entries) e.first = new_index[e.first];
    result.reduced.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace robustflow::lp::internal
