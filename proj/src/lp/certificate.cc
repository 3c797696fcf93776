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

#include <algorithm>

#include "lp/internal.h"

namespace robustflow::lp::internal {

namespace {

using SparseRow = std::vector<std::pair<int, Rational>>;

// target -= factor * source, both sorted by column.
void AxpyInto(SparseRow& target, const Rational& factor,
              const SparseRow& source, std::vector<int>& added,
              std::vector<int>& removed) {
  SparseRow merged;
  merged.reserve(target.size() + source.size());
  size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() ||
        (i < target.size() && target[i].first < source[j].first)) {
      merged.push_back(std::move(target[i++]));
    } else if (i == target.size() || source[j].first < target[i].first) {
      merged.emplace_back(source[j].first, -factor * source[j].second);
      added.push_back(source[j].first);
      ++j;
    } else {
      Rational v = target[i].second - factor * source[j].second;
      if (sgn(v) != 0) {
        merged.emplace_back(target[i].first, std::move(v));
      } else {
        removed.push_back(target[i].first);
      }
      ++i;
      ++j;
    }
  }
  target = std::move(merged);
}

}  // namespace

bool SolveSparseSystem(int n, std::vector<SparseRow> rows,
                       std::vector<Rational> rhs, std::vector<Rational>* x) {
  if (static_cast<int>(rows.size()) != n) return false;
  std::vector<std::vector<int>> col_rows(n);
  std::vector<int> col_count(n, 0);
  for (int r = 0; r < n; ++r) {
    for (const auto& e : rows[r]) {
      col_rows[e.first].push_back(r);
      ++col_count[e.first];
    }
  }
  std::vector<bool> row_done(n, false), col_done(n, false);
  std::vector<std::pair<int, int>> order;  // (row, col)
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int col = -1;
    for (int c = 0; c < n; ++c) {
      if (!col_done[c] && (col < 0 || col_count[c] < col_count[col])) col = c;
    }
    int pivot_row = -1;
    for (int r : col_rows[col]) {
      if (row_done[r]) continue;
      const bool has = std::binary_search(
          rows[r].begin(), rows[r].end(), std::make_pair(col, Rational(0)),
          [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!has) continue;
      if (pivot_row < 0 || rows[r].size() < rows[pivot_row].size()) {
        pivot_row = r;
      }
    }
    if (pivot_row < 0) return false;
    const auto pivot_it = std::lower_bound(
        rows[pivot_row].begin(), rows[pivot_row].end(), col,
        [](const auto& e, int c) { return e.first < c; });
    const Rational pivot = pivot_it->second;
    row_done[pivot_row] = true;
    col_done[col] = true;
    order.emplace_back(pivot_row, col);
    for (const auto& e : rows[pivot_row]) --col_count[e.first];
    std::vector<int> touched = col_rows[col];
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int r : touched) {
      if (row_done[r]) continue;
      auto it = std::lower_bound(rows[r].begin(), rows[r].end(), col,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == rows[r].end() || it->first != col) continue;
      const Rational factor = it->second / pivot;
      std::vector<int> added, removed;
      AxpyInto(rows[r], factor, rows[pivot_row], added, removed);
      rhs[r] -= factor * rhs[pivot_row];
      for (int c : added) {
        col_rows[c].push_back(r);
        ++col_count[c];
      }
      for (int c : removed) --col_count[c];
    }
  }
  x->assign(n, Rational(0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto [r, c] = *it;
    Rational acc = rhs[r];
    Rational pivot;
    for (const auto& [col, coef] : rows[r]) {
      if (col == c) {
        pivot = coef;
      } else {
        acc -= coef * (*x)[col];
      }
    }
    (*x)[c] = acc / pivot;
  }
  return true;
}

bool CertifyBasis(const CanonicalLp& lp, const Basis& basis,
                  std::vector<Rational>* x) {
  const int m = static_cast<int>(lp.rows.size());
  std::vector<int> free_rows;
  for (int i = 0; i < m; ++i) {
    if (basis.row_status[i] == RowBasis::kStructural) free_rows.push_back(i);
  }
  const int k = static_cast<int>(basis.structural.size());
  if (static_cast<int>(free_rows.size()) != k) return false;
  std::vector<int> local(lp.num_columns, -1);
  for (int j = 0; j < k; ++j) local[basis.structural[j]] = j;

  // Primal: A[free_rows, J] x_J = b[free_rows].
  std::vector<SparseRow> primal_rows(k);
  std::vector<Rational> primal_rhs(k);
  std::vector<SparseRow> dual_rows(k);  // transpose
  for (int r = 0; r < k; ++r) {
    const Row& row = lp.rows[free_rows[r]];
    primal_rhs[r] = row.rhs;
    for (const auto& [col, coef] : row.entries) {
      if (local[col] < 0) continue;
      primal_rows[r].emplace_back(local[col], coef);
      dual_rows[local[col]].emplace_back(r, coef);
    }
    std::sort(primal_rows[r].begin(), primal_rows[r].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::vector<Rational> xb;
  if (!SolveSparseSystem(k, std::move(primal_rows), std::move(primal_rhs), &xb)) {
    return false;
  }
  std::vector<Rational> values(lp.num_columns, 0);
  for (int j = 0; j < k; ++j) {
    if (sgn(xb[j]) < 0) return false;
    values[basis.structural[j]] = xb[j];
  }
  for (const Row& row : lp.rows) {
    Rational lhs = 0;
    for (const auto& [col, coef] : row.entries) lhs += coef * values[col];
    switch (row.relation) {
      case Relation::kLessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != row.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }

  // Dual: A[free_rows, J]^T y = c_J, y = 0 on rows with a basic unit column.
  std::vector<Rational> dual_rhs(k);
  for (int j = 0; j < k; ++j) dual_rhs[j] = lp.cost[basis.structural[j]];
  std::vector<Rational> yf;
  if (!SolveSparseSystem(k, std::move(dual_rows), std::move(dual_rhs), &yf)) {
    return false;
  }
  std::vector<Rational> y(m, 0);
  for (int r = 0; r < k; ++r) y[free_rows[r]] = yf[r];
  Rational dual_objective = 0;
  std::vector<Rational> reduced(lp.num_columns, 0);
  for (int i = 0; i < m; ++i) {
    const Row& row = lp.rows[i];
    const int s = sgn(y[i]);
    if (row.relation == Relation::kLessEqual && s < 0) return false;
    if (row.relation == Relation::kGreaterEqual && s > 0) return false;
    if (s == 0) continue;
    dual_objective += y[i] * row.rhs;
    for (const auto& [col, coef] : row.entries) reduced[col] += y[i] * coef;
  }
  Rational primal_objective = 0;
  for (int j = 0; j < lp.num_columns; ++j) {
    if (reduced[j] < lp.cost[j]) return false;
    primal_objective += lp.cost[j] * values[j];
  }
  if (primal_objective != dual_objective) return false;
  *x = std::move(values);
  return true;
}

}  // namespace robustflow::lp::internal
