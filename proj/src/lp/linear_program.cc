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
#include <sstream>

#include "lp/internal.h"
#include "robustflow/errors.h"
#include "robustflow/lp.h"

namespace robustflow::lp {

namespace {

std::vector<Term> Merge(std::vector<Term> terms, int num_variables) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> out;
  for (Term& t : terms) {
    t.coef.canonicalize();
    if (t.var < 0 || t.var >= num_variables) {
      ThrowInvalid("term references unknown variable " + std::to_string(t.var));
    }
    if (!out.empty() && out.back().var == t.var) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  return out;
}

const char* RelationText(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

void AppendTerms(std::ostringstream& out, const std::vector<Term>& terms,
                 const std::vector<Variable>& vars) {
  if (terms.empty()) out << " 0";
  for (const Term& t : terms) {
    out << (t.coef < 0 ? " - " : " + ");
    const Rational magnitude = abs(t.coef);
    if (magnitude != 1) out << ToString(magnitude) << " ";
    out << vars[t.var].name;
  }
}

}  // namespace

int LinearProgram::AddVariable(const std::string& name, bool free) {
  variables_.push_back({name, free});
  return num_variables() - 1;
}

void LinearProgram::AddConstraint(std::vector<Term> terms, Relation relation,
                                  const Rational& rhs,
                                  const std::string& name) {
  Rational canonical_rhs = rhs;
  canonical_rhs.canonicalize();
  constraints_.push_back({Merge(std::move(terms), num_variables()), relation,
                          std::move(canonical_rhs), name});
}

void LinearProgram::SetObjective(Sense sense, std::vector<Term> terms) {
  sense_ = sense;
  objective_ = Merge(std::move(terms), num_variables());
}

std::string LinearProgram::ToText() const {
  std::ostringstream out;
  out << (sense_ == Sense::kMaximize ? "maximize" : "minimize") << "\n  obj:";
  AppendTerms(out, objective_, variables_);
  out << "\nsubject to\n";
  for (size_t i = 0; i < constraints_.size(); ++i) {
    const Constraint& c = constraints_[i];
    out << "  " << (c.name.empty() ? "r" + std::to_string(i) : c.name) << ":";
    AppendTerms(out, c.terms, variables_);
    out << " " << RelationText(c.relation) << " " << ToString(c.rhs) << "\n";
  }
  bool any_free = false;
  for (const Variable& v : variables_) any_free |= v.free;
  if (any_free) {
    out << "bounds\n";
    for (const Variable& v : variables_) {
      if (v.free) out << "  " << v.name << " free\n";
    }
  }
  out << "end\n";
  return out.str();
}

std::string StatusName(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

Rational Evaluate(const std::vector<Term>& terms,
                  const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Term& t : terms) total += t.coef * values[t.var];
  return total;
}

std::vector<std::string> Violations(const LinearProgram& program,
                                    const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (int j = 0; j < program.num_variables(); ++j) {
    if (!program.variables()[j].free && values[j] < 0) {
      out.push_back(program.variables()[j].name + " >= 0");
    }
  }
  for (size_t i = 0; i < program.constraints().size(); ++i) {
    const Constraint& c = program.constraints()[i];
    const Rational lhs = Evaluate(c.terms, values);
    bool ok = true;
    switch (c.relation) {
      case Relation::kLessEqual:
        ok = lhs <= c.rhs;
        break;
      case Relation::kEqual:
        ok = lhs == c.rhs;
        break;
      case Relation::kGreaterEqual:
        ok = lhs >= c.rhs;
        break;
    }
    if (!ok) out.push_back(c.name.empty() ? "r" + std::to_string(i) : c.name);
  }
  return out;
}

Solution Solve(const LinearProgram& program, const SolveOptions& options) {
  using internal::CanonicalLp;
  // Free variables are split into a positive and a negative column.
  CanonicalLp canonical;
  std::vector<int> positive(program.num_variables());
  std::vector<int> negative(program.num_variables(), -1);
  for (int j = 0; j < program.num_variables(); ++j) {
    positive[j] = canonical.num_columns++;
    if (program.variables()[j].free) negative[j] = canonical.num_columns++;
  }
  canonical.cost.assign(canonical.num_columns, 0);
  const int sign = program.sense() == Sense::kMaximize ? 1 : -1;
  for (const Term& t : program.objective()) {
    canonical.cost[positive[t.var]] = sign * t.coef;
    if (negative[t.var] >= 0) canonical.cost[negative[t.var]] = -sign * t.coef;
  }
  canonical.rows.reserve(program.constraints().size());
  for (const Constraint& c : program.constraints()) {
    internal::Row row;
    row.relation = c.relation;
    row.rhs = c.rhs;
    for (const Term& t : c.terms) {
      row.entries.emplace_back(positive[t.var], t.coef);
      if (negative[t.var] >= 0) row.entries.emplace_back(negative[t.var], -t.coef);
    }
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    canonical.rows.push_back(std::move(row));
  }

  Solution solution;
  internal::PresolveResult pre;
  if (options.presolve) {
    pre = internal::Presolve(canonical);
  } else {
    pre.reduced = canonical;
    pre.kept_columns.resize(canonical.num_columns);
    for (int j = 0; j < canonical.num_columns; ++j) pre.kept_columns[j] = j;
  }
  if (pre.infeasible) {
    solution.status = Status::kInfeasible;
    return solution;
  }
  solution.stats.presolved_rows = static_cast<int>(pre.reduced.rows.size());
  solution.stats.presolved_columns = pre.reduced.num_columns;

  std::vector<Rational> reduced_x;
  bool done = false;
  if (options.method == Method::kCertifiedBasis) {
    internal::TableauResult guess = internal::FloatSimplex(pre.reduced);
    solution.stats.float_iterations = guess.iterations;
    if (guess.status == Status::kOptimal && !guess.gave_up &&
        internal::CertifyBasis(pre.reduced, guess.basis, &reduced_x)) {
      solution.stats.certified = true;
      done = true;
    }
  }
  if (!done) {
    internal::TableauResult exact = internal::ExactSimplex(pre.reduced);
    solution.stats.exact_iterations = exact.iterations;
    if (exact.status != Status::kOptimal) {
      solution.status = exact.status;
      return solution;
    }
    reduced_x = std::move(exact.x);
  }

  std::vector<Rational> column_values(canonical.num_columns, 0);
  for (size_t j = 0; j < pre.kept_columns.size(); ++j) {
    column_values[pre.kept_columns[j]] = reduced_x[j];
  }
  solution.values.assign(program.num_variables(), 0);
  for (int j = 0; j < program.num_variables(); ++j) {
    solution.values[j] = column_values[positive[j]];
    if (negative[j] >= 0) solution.values[j] -= column_values[negative[j]];
  }
  const std::vector<std::string> broken = Violations(program, solution.values);
  if (!broken.empty()) {
    ThrowInternal("solver returned a point violating " + broken.front());
  }
  solution.status = Status::kOptimal;
  solution.objective_value = Evaluate(program.objective(), solution.values);
  return solution;
}

LexicographicSolution LexicographicSolve(const LinearProgram& program,
                                         const std::vector<Term>& secondary,
                                         Sense secondary_sense,
                                         const SolveOptions& options) {
  LexicographicSolution out;
  out.primary = Solve(program, options);
  if (out.primary.status != Status::kOptimal) {
    out.secondary = out.primary;
    return out;
  }
  LinearProgram pinned = program;
  pinned.AddConstraint(program.objective(), Relation::kEqual,
                       out.primary.objective_value, "primary_optimum");
  pinned.SetObjective(secondary_sense, secondary);
  out.secondary = Solve(pinned, options);
  if (out.secondary.status != Status::kOptimal) {
    ThrowInternal("secondary stage is " + StatusName(out.secondary.status));
  }
  out.secondary_value = out.secondary.objective_value;
  out.secondary.objective_value =
      Evaluate(program.objective(), out.secondary.values);
  return out;
}

}  // namespace robustflow::lp
