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

// Two-phase dense tableau simplex, instantiated for double (basis search) and
// for exact rationals (decision procedure). The rational instance always
// prices with Bland's rule. The double instance prices by largest reduced
// cost and switches to Bland's rule during long degenerate stretches.

#include <cmath>

#include "lp/internal.h"

namespace robustflow::lp::internal {

namespace {

template <typename Num>
struct Arith;

template <>
struct Arith<double> {
  static constexpr bool kExact = false;
  static constexpr double kCostTol = 1e-9;
  static constexpr double kPivotTol = 1e-9;
  static constexpr double kFeasTol = 1e-7;
  static bool Positive(double x) { return x > kCostTol; }
  static bool PivotOk(double x) { return x > kPivotTol; }
  static bool NonZero(double x) { return std::abs(x) > kPivotTol; }
  static bool Infeasible(double sum) { return sum > kFeasTol; }
  static double From(const Rational& r) { return r.get_d(); }
  static double Magnitude(double x) { return std::abs(x); }
  static void Clean(double& x) {
    if (std::abs(x) < 1e-13) x = 0;
  }
};

template <>
struct Arith<Rational> {
  static constexpr bool kExact = true;
  static bool Positive(const Rational& x) { return sgn(x) > 0; }
  static bool PivotOk(const Rational& x) { return sgn(x) > 0; }
  static bool NonZero(const Rational& x) { return sgn(x) != 0; }
  static bool Infeasible(const Rational& sum) { return sgn(sum) > 0; }
  static Rational From(const Rational& r) { return r; }
  static Rational Magnitude(const Rational& x) { return abs(x); }
  static void Clean(Rational&) {}
};

enum class ColumnKind { kStructural, kSlack, kArtificial };

template <typename Num>
class Tableau {
  using A = Arith<Num>;

 public:
  explicit Tableau(const CanonicalLp& lp)
      : m_(static_cast<int>(lp.rows.size())), n_(lp.num_columns) {
    std::vector<Relation> rel(m_);
    std::vector<bool> flip(m_, false);
    int aux = 0;
    for (int i = 0; i < m_; ++i) {
      rel[i] = lp.rows[i].relation;
      if (sgn(lp.rows[i].rhs) < 0) {
        flip[i] = true;
        if (rel[i] == Relation::kLessEqual) {
          rel[i] = Relation::kGreaterEqual;
        } else if (rel[i] == Relation::kGreaterEqual) {
          rel[i] = Relation::kLessEqual;
        }
      }
      aux += rel[i] == Relation::kGreaterEqual ? 2 : 1;
    }
    cols_ = n_ + aux;
    width_ = cols_ + 1;
    kind_.assign(cols_, ColumnKind::kStructural);
    owner_.assign(cols_, -1);
    blocked_.assign(cols_, false);
    t_.assign(static_cast<size_t>(m_) * width_, Num(0));
    basis_.assign(m_, -1);
    cost_.assign(cols_, Num(0));
    for (int j = 0; j < n_; ++j) cost_[j] = A::From(lp.cost[j]);
    int next = n_;
    for (int i = 0; i < m_; ++i) {
      const Row& row = lp.rows[i];
      for (const auto& [col, coef] : row.entries) {
        at(i, col) = A::From(flip[i] ? Rational(-coef) : coef);
      }
      at(i, cols_) = A::From(flip[i] ? Rational(-row.rhs) : row.rhs);
      if (rel[i] != Relation::kEqual) {
        kind_[next] = ColumnKind::kSlack;
        owner_[next] = i;
        at(i, next) = rel[i] == Relation::kLessEqual ? Num(1) : Num(-1);
        if (rel[i] == Relation::kLessEqual) basis_[i] = next;
        ++next;
      }
      if (rel[i] != Relation::kLessEqual) {
        kind_[next] = ColumnKind::kArtificial;
        owner_[next] = i;
        at(i, next) = Num(1);
        basis_[i] = next;
        ++next;
      }
    }
    limit_ = A::kExact ? -1 : 50 * (m_ + cols_) + 1000;
  }

  TableauResult Run() {
    TableauResult result;
    bool has_artificial = false;
    for (int i = 0; i < m_; ++i) {
      has_artificial |= kind_[basis_[i]] == ColumnKind::kArtificial;
    }
    for (int j = 0; j < cols_; ++j) {
      if (kind_[j] == ColumnKind::kArtificial) blocked_[j] = true;
    }
    if (has_artificial) {
      obj_.assign(width_, Num(0));
      for (int i = 0; i < m_; ++i) {
        if (kind_[basis_[i]] != ColumnKind::kArtificial) continue;
        for (int k = 0; k <= cols_; ++k) {
          if (k < cols_ && kind_[k] == ColumnKind::kArtificial) continue;
          obj_[k] += at(i, k);
        }
      }
      const Status phase1 = Iterate(result);
      if (result.gave_up) return result;
      if (phase1 != Status::kOptimal || A::Infeasible(obj_[cols_])) {
        result.status = Status::kInfeasible;
        return Finish(result);
      }
      DriveOutArtificials();
    }
    obj_.assign(width_, Num(0));
    for (int j = 0; j < cols_; ++j) obj_[j] = cost_[j];
    for (int i = 0; i < m_; ++i) {
      const Num c = cost_[basis_[i]];
      if (!A::NonZero(c)) continue;
      for (int k = 0; k <= cols_; ++k) obj_[k] -= c * at(i, k);
    }
    result.status = Iterate(result);
    return Finish(result);
  }

 private:
  Num& at(int i, int k) { return t_[static_cast<size_t>(i) * width_ + k]; }

  Status Iterate(TableauResult& result) {
    bool bland = A::kExact;
    int degenerate_streak = 0;
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (blocked_[j] || !A::Positive(obj_[j])) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter < 0 || obj_[j] > obj_[enter]) enter = j;
      }
      if (enter < 0) return Status::kOptimal;
      int leave = -1;
      Num best_ratio(0);
      for (int i = 0; i < m_; ++i) {
        const Num& a = at(i, enter);
        if (!A::PivotOk(a)) continue;
        Num rhs = at(i, cols_);
        if constexpr (!A::kExact) {
          if (rhs < 0) rhs = 0;
        }
        const Num ratio = rhs / a;
        bool take = leave < 0;
        if (!take) {
          if constexpr (A::kExact) {
            take = ratio < best_ratio ||
                   (ratio == best_ratio && basis_[i] < basis_[leave]);
          } else {
            const double tol = 1e-12 * (1 + std::abs(best_ratio));
            if (ratio < best_ratio - tol) {
              take = true;
            } else if (ratio <= best_ratio + tol) {
              take = bland ? basis_[i] < basis_[leave]
                           : A::Magnitude(a) > A::Magnitude(at(leave, enter));
            }
          }
        }
        if (take) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return Status::kUnbounded;
      if constexpr (!A::kExact) {
        if (A::NonZero(best_ratio)) {
          degenerate_streak = 0;
          bland = false;
        } else if (++degenerate_streak > 50) {
          bland = true;
        }
      }
      Pivot(leave, enter);
      ++result.iterations;
      if (limit_ >= 0 && result.iterations > limit_) {
        result.gave_up = true;
        return Status::kOptimal;
      }
    }
  }

  void Pivot(int r, int j) {
    const Num p = at(r, j);
    std::vector<int> nz;
    for (int k = 0; k <= cols_; ++k) {
      Num& v = at(r, k);
      A::Clean(v);
      if (v != 0) {
        v /= p;
        nz.push_back(k);
      }
    }
    at(r, j) = Num(1);
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Num f = at(i, j);
      if (f == 0) continue;
      for (int k : nz) {
        Num& v = at(i, k);
        v -= f * at(r, k);
        A::Clean(v);
      }
      at(i, j) = Num(0);
    }
    const Num f = obj_[j];
    if (f != 0) {
      for (int k : nz) {
        obj_[k] -= f * at(r, k);
        A::Clean(obj_[k]);
      }
      obj_[j] = Num(0);
    }
    basis_[r] = j;
  }

  void DriveOutArtificials() {
    for (int i = 0; i < m_; ++i) {
      if (kind_[basis_[i]] != ColumnKind::kArtificial) continue;
      int best = -1;
      for (int j = 0; j < cols_; ++j) {
        if (kind_[j] == ColumnKind::kArtificial || !A::NonZero(at(i, j))) {
          continue;
        }
        if (best < 0) {
          best = j;
          if (A::kExact) break;
        } else if (A::Magnitude(at(i, j)) > A::Magnitude(at(i, best))) {
          best = j;
        }
      }
      // No candidate: the row is redundant and its artificial stays at zero.
      if (best >= 0) Pivot(i, best);
    }
  }

  TableauResult Finish(TableauResult& result) {
    result.basis.row_status.assign(m_, RowBasis::kStructural);
    if constexpr (A::kExact) result.x.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      const int col = basis_[i];
      if (kind_[col] == ColumnKind::kStructural) {
        result.basis.structural.push_back(col);
        if constexpr (A::kExact) result.x[col] = at(i, cols_);
      } else {
        result.basis.row_status[owner_[col]] = RowBasis::kUnit;
      }
    }
    return std::move(result);
  }

  int m_;
  int n_;
  int cols_ = 0;
  int width_ = 0;
  long limit_ = -1;
  std::vector<Num> t_;
  std::vector<Num> obj_;
  std::vector<Num> cost_;
  std::vector<int> basis_;
  std::vector<ColumnKind> kind_;
  std::vector<int> owner_;
  std::vector<bool> blocked_;
};

}  // namespace

TableauResult FloatSimplex(const CanonicalLp& lp) {
  return Tableau<double>(lp).Run();
}

TableauResult ExactSimplex(const CanonicalLp& lp) {
  return Tableau<Rational>(lp).Run();
}

}  // namespace robustflow::lp::internal
