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

// Exact rational linear programming.
//
// Solve() runs an exact presolve, locates a candidate optimal basis with a
// floating-point simplex, and then certifies that basis in rational
// arithmetic (primal feasibility, dual feasibility, equal objectives). When
// the certificate fails, or the floating-point phase reports infeasibility or
// unboundedness, a rational tableau simplex with Bland's rule decides the LP
// from scratch. Returned values always satisfy every constraint exactly.

#ifndef ROBUSTFLOW_LP_H_
#define ROBUSTFLOW_LP_H_

#include <string>
#include <vector>

#include "robustflow/rational.h"

namespace robustflow::lp {

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  int var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;  // merged, no zero coefficients, sorted by var
  Relation relation;
  Rational rhs;
  std::string name;
};

struct Variable {
  std::string name;
  bool free = false;  // otherwise nonnegative
};

class LinearProgram {
 public:
  int AddVariable(const std::string& name, bool free = false);
  // Duplicate variables in `terms` are merged.
  void AddConstraint(std::vector<Term> terms, Relation relation,
                     const Rational& rhs, const std::string& name = "");
  void SetObjective(Sense sense, std::vector<Term> terms);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  Sense sense() const { return sense_; }
  const std::vector<Term>& objective() const { return objective_; }

  // Human-readable equation listing, one constraint per line.
  std::string ToText() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  Sense sense_ = Sense::kMaximize;
  std::vector<Term> objective_;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string StatusName(Status status);

enum class Method {
  // Floating-point basis search followed by exact certification.
  kCertifiedBasis,
  // Rational tableau simplex with Bland's rule throughout.
  kExactTableau,
};

struct SolveOptions {
  Method method = Method::kCertifiedBasis;
  bool presolve = true;
};

struct SolveStats {
  int presolved_rows = 0;
  int presolved_columns = 0;
  int float_iterations = 0;
  int exact_iterations = 0;
  bool certified = false;  // the floating-point basis passed certification
};

struct Solution {
  Status status = Status::kInfeasible;
  Rational objective_value;  // meaningful when optimal
  std::vector<Rational> values;
  SolveStats stats;
};

Solution Solve(const LinearProgram& program, const SolveOptions& options = {});

// Optimizes the program's own objective, fixes it at its optimum with an
// equality, and then optimizes `secondary` in direction `secondary_sense`.
// The returned objective_value is that of the primary objective.
struct LexicographicSolution {
  Solution primary;
  Solution secondary;  // values are the final point
  Rational secondary_value;
};

LexicographicSolution LexicographicSolve(const LinearProgram& program,
                                         const std::vector<Term>& secondary,
                                         Sense secondary_sense,
                                         const SolveOptions& options = {});

// Evaluates sum coef * values[var].
Rational Evaluate(const std::vector<Term>& terms,
                  const std::vector<Rational>& values);

// Names of constraints (or "var >= 0" bounds) violated by `values`.
std::vector<std::string> Violations(const LinearProgram& program,
                                    const std::vector<Rational>& values);

}  // namespace robustflow::lp

#endif  // ROBUSTFLOW_LP_H_
