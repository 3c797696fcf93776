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

// Shared pieces of the solver pipeline. Everything here works on the
// canonical form: maximize cost * x subject to rows, x >= 0.

#ifndef ROBUSTFLOW_LP_INTERNAL_H_
#define ROBUSTFLOW_LP_INTERNAL_H_

#include <utility>
#include <vector>

#include "robustflow/lp.h"

namespace robustflow::lp::internal {

struct Row {
  std::vector<std::pair<int, Rational>> entries;  // sorted by column
  Relation relation;
  Rational rhs;
};

struct CanonicalLp {
  int num_columns = 0;
  std::vector<Rational> cost;
  std::vector<Row> rows;
};

struct PresolveResult {
  bool infeasible = false;
  CanonicalLp reduced;
  std::vector<int> kept_columns;  // reduced column -> original column
};

PresolveResult Presolve(const CanonicalLp& lp);

// Which auxiliary column is basic for a row, if any.
enum class RowBasis { kStructural, kUnit };

struct Basis {
  std::vector<int> structural;       // basic structural columns
  std::vector<RowBasis> row_status;  // kUnit when the row's own slack,
                                     // surplus or artificial is basic
};

struct TableauResult {
  Status status = Status::kInfeasible;
  std::vector<Rational> x;  // exact runs only
  Basis basis;
  int iterations = 0;
  bool gave_up = false;  // floating-point run hit its iteration limit
};

TableauResult FloatSimplex(const CanonicalLp& lp);
TableauResult ExactSimplex(const CanonicalLp& lp);

// Returns true and fills `x` when `basis` is provably optimal.
bool CertifyBasis(const CanonicalLp& lp, const Basis& basis,
                  std::vector<Rational>* x);

// Solves the square system given by sparse rows over columns [0, n).
// Returns false when singular.
bool SolveSparseSystem(int n,
                       std::vector<std::vector<std::pair<int, Rational>>> rows,
                       std::vector<Rational> rhs, std::vector<Rational>* x);

}  // namespace robustflow::lp::internal

#endif  // ROBUSTFLOW_LP_INTERNAL_H_
