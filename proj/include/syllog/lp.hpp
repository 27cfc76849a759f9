#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "syllog/model.hpp"
#include "syllog/statements.hpp"

namespace syllog {

// Strictness threshold for the inequality reformulation, exact and in (0,1).
struct Epsilon {
  Rational value;

  explicit Epsilon(Rational v) : value(std::move(v)) {
    if (value <= 0 || value >= 1) {
      throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
    }
  }
  static Epsilon standard() { return Epsilon(Rational(1, 100)); }
};

enum class Sense { Min, Max };

// Weak row: form {=, >=, <=} rhs.
struct LpRow {
  enum class Kind { Eq, Ge, Le };
  LinearForm form;
  Kind kind = Kind::Eq;
  Rational rhs;
};

struct LpProblem {
  LinearForm objective;
  Sense sense = Sense::Min;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> witness;  // parameter values, when Optimal
};

// Weakens each strict constraint `form > 0` to `form >= eps`, keeps
// equalities, and appends the normalization row and the 0 <= x_i <= 1 boxes.
inline std::vector<LpRow> reformulate(const std::vector<Constraint>& premises,
                                      const Epsilon& eps,
                                      std::size_t dimension) {
  std::vector<LpRow> rows;
  for (const Constraint& c : premises) {
    if (c.form.dimension() != dimension) {
      throw std::invalid_argument("constraint dimension mismatch");
    }
    if (c.kind == Constraint::Kind::EqZero) {
      rows.push_back({c.form, LpRow::Kind::Eq, Rational(0)});
    } else {
      rows.push_back({c.form, LpRow::Kind::Ge, eps.value});
    }
  }
  LinearForm ones(dimension);
  for (std::size_t i = 0; i < dimension; ++i) ones.coeffs[i] = 1;
  rows.push_back({ones, LpRow::Kind::Eq, Rational(1)});
  for (std::size_t i = 0; i < dimension; ++i) {
    LinearForm unit(dimension);
    unit.coeffs[i] = 1;
    rows.push_back({unit, LpRow::Kind::Ge, Rational(0)});
    rows.push_back({unit, LpRow::Kind::Le, Rational(1)});
  }
  return rows;
}

inline LpProblem make_problem(LinearForm objective, Sense sense,
                              const std::vector<Constraint>& premises,
                              const Epsilon& eps) {
  std::size_t dim = objective.dimension();
  return LpProblem{std::move(objective), sense, reformulate(premises, eps, dim)};
}

namespace detail {

// Dense two-phase primal simplex over exact rationals, Bland's pivot rule.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LpProblem& problem) : problem_(problem) {
    n_ = problem.objective.dimension();
    for (const LpRow& row : problem.rows) {
      if (row.form.dimension() != n_) {
        throw std::invalid_argument("LP row dimension mismatch");
      }
    }
    m_ = problem.rows.size();
  }

  LpOutcome run() {
    build_tableau();
    if (!phase_one()) return LpOutcome{LpStatus::Infeasible, Rational(0), {}};
    phase_two();
    return extract();
  }

 private:
  // Columns: n_ structural, then one slack per inequality row, then one
  // artificial per row. Column n_total_ is the right-hand side.
  void build_tableau() {
    slack_of_.assign(m_, SIZE_MAX);
    std::size_t slacks = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (problem_.rows[i].kind != LpRow::Kind::Eq) slack_of_[i] = slacks++;
    }
    n_slack_ = slacks;
    n_total_ = n_ + n_slack_ + m_;  // artificials last
    tableau_.assign(m_ + 1, std::vector<Rational>(n_total_ + 1, Rational(0)));
    basis_.assign(m_, 0);

    for (std::size_t i = 0; i < m_; ++i) {
      const LpRow& row = problem_.rows[i];
      Rational rhs = row.rhs - row.form.constant;
      std::vector<Rational>& t = tableau_[i];
      for (std::size_t j = 0; j < n_; ++j) t[j] = row.form.coeffs[j];
      if (row.kind == LpRow::Kind::Ge) {
        t[n_ + slack_of_[i]] = -1;  // surplus
      } else if (row.kind == LpRow::Kind::Le) {
        t[n_ + slack_of_[i]] = 1;
      }
      t[n_total_] = rhs;
      if (rhs < 0) {
        for (Rational& v : t) v = -v;
      }
      std::size_t art = n_ + n_slack_ + i;
      t[art] = 1;
      basis_[i] = art;
    }
  }

  // Minimizes the sum of artificials; true iff it reaches zero.
  bool phase_one() {
    std::vector<Rational> cost(n_total_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) cost[n_ + n_slack_ + i] = 1;
    set_objective_row(cost);
    iterate(/*forbid_artificials=*/false);
    if (objective_value(cost) != 0) return false;
    evict_artificials();
    return true;
  }

  void phase_two() {
    std::vector<Rational> cost(n_total_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      cost[j] = problem_.sense == Sense::Min ? problem_.objective.coeffs[j]
                                             : -problem_.objective.coeffs[j];
    }
    set_objective_row(cost);
    iterate(/*forbid_artificials=*/true);
  }

  void set_objective_row(const std::vector<Rational>& cost) {
    std::vector<Rational>& z = tableau_[m_];
    for (std::size_t j = 0; j <= n_total_; ++j) {
      z[j] = j < n_total_ ? cost[j] : Rational(0);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= n_total_; ++j) {
        z[j] -= cb * tableau_[i][j];
      }
    }
  }

  void iterate(bool forbid_artificials) {
    std::size_t art_begin = n_ + n_slack_;
    for (;;) {
      // Bland: entering column is the lowest index with negative reduced cost.
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < n_total_; ++j) {
        if (forbid_artificials && j >= art_begin) break;
        if (tableau_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return;
      // Ratio test; ties broken by the lowest basic variable index.
      std::size_t leave = SIZE_MAX;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = tableau_[i][enter];
        if (a <= 0) continue;
        Rational ratio = tableau_[i][n_total_] / a;
        if (leave == SIZE_MAX || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == SIZE_MAX) {
        // The feasible region lies inside the unit simplex; unboundedness
        // indicates a malformed problem.
        throw std::logic_error("unbounded LP over the probability simplex");
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    std::vector<Rational>& pr = tableau_[row];
    Rational p = pr[col];
    for (Rational& v : pr) v /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      Rational factor = tableau_[i][col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= n_total_; ++j) {
        tableau_[i][j] -= factor * pr[j];
      }
    }
    basis_[row] = col;
  }

  // Pivots basic artificials (necessarily at zero) out; rows with no
  // non-artificial pivot candidate are redundant and zeroed.
  void evict_artificials() {
    std::size_t art_begin = n_ + n_slack_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin) continue;
      std::size_t col = SIZE_MAX;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (tableau_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == SIZE_MAX) {
        for (Rational& v : tableau_[i]) v = 0;
        continue;
      }
      pivot(i, col);
    }
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational z(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (cost[basis_[i]] != 0) z += cost[basis_[i]] * tableau_[i][n_total_];
    }
    return z;
  }

  LpOutcome extract() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = tableau_[i][n_total_];
    }
    Rational value = problem_.objective.constant;
    for (std::size_t j = 0; j < n_; ++j) {
      value += problem_.objective.coeffs[j] * x[j];
    }
    verify(x, value);
    return LpOutcome{LpStatus::Optimal, value, x};
  }

  // Exact re-substitution: the witness must satisfy every row.
  void verify(const std::vector<Rational>& x, const Rational&) const {
    for (const LpRow& row : problem_.rows) {
      Rational lhs = row.form.constant;
      for (std::size_t j = 0; j < n_; ++j) lhs += row.form.coeffs[j] * x[j];
      bool ok = row.kind == LpRow::Kind::Eq   ? lhs == row.rhs
                : row.kind == LpRow::Kind::Ge ? lhs >= row.rhs
                                              : lhs <= row.rhs;
      if (!ok) throw std::logic_error("simplex witness violates a constraint");
    }
  }

  const LpProblem& problem_;
  std::size_t n_ = 0, m_ = 0, n_slack_ = 0, n_total_ = 0;
  std::vector<std::size_t> slack_of_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// Exact global optimum over the closed feasible polytope, or Infeasible.
inline LpOutcome solve(const LpProblem& problem) {
  return detail::SimplexSolver(problem).run();
}

namespace detail {

// Row-echelon accumulator over exact rationals, for the vertex oracle.
// Rows are stored reduced against earlier pivots.
class EchelonState {
 public:
  explicit EchelonState(std::size_t n) : n_(n) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces (coeffs, rhs) against the current rows. Returns:
  //   +1 added (rank grew), 0 dependent and consistent, -1 inconsistent.
  int add(std::vector<Rational> coeffs, Rational rhs) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational c = coeffs[pivots_[k]];  // by value: the loop overwrites it
      if (c == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) coeffs[j] -= c * rows_[k][j];
      rhs -= c * rhs_[k];
    }
    std::size_t pivot = SIZE_MAX;
    for (std::size_t j = 0; j < n_; ++j) {
      if (coeffs[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == SIZE_MAX) return rhs == 0 ? 0 : -1;
    Rational p = coeffs[pivot];
    for (std::size_t j = 0; j < n_; ++j) coeffs[j] /= p;
    rhs /= p;
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
    pivots_.push_back(pivot);
    return 1;
  }

  void pop() {
    rows_.pop_back();
    rhs_.pop_back();
    pivots_.pop_back();
  }

  // Back-substitution; valid only at full rank.
  std::vector<Rational> solve_point() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t k = rows_.size(); k-- > 0;) {
      Rational v = rhs_[k];
      for (std::size_t j = pivots_[k] + 1; j < n_; ++j) {
        v -= rows_[k][j] * x[j];
      }
      x[pivots_[k]] = v;
    }
    return x;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> pivots_;
};

struct HalfSpace {
  std::vector<Rational> coeffs;  // coeffs . x >= rhs
  Rational rhs;
};

}  // namespace detail

// Independent oracle: enumerates basic feasible solutions by activating
// constraint subsets, solving the square exact systems, and taking the best
// feasible objective. The feasible set is compact, so it is nonempty iff it
// has a vertex. Intended for small problems only.
inline LpOutcome vertex_oracle(const LpProblem& problem) {
  std::size_t n = problem.objective.dimension();
  if (n > 8) throw std::invalid_argument("vertex oracle limited to 8 variables");
  if (problem.rows.size() > 64) {
    throw std::invalid_argument("vertex oracle limited to 64 constraints");
  }

  std::vector<detail::HalfSpace> inequalities;
  detail::EchelonState eqs(n);
  for (const LpRow& row : problem.rows) {
    std::vector<Rational> coeffs = row.form.coeffs;
    Rational rhs = row.rhs - row.form.constant;
    switch (row.kind) {
      case LpRow::Kind::Eq:
        if (eqs.add(coeffs, rhs) < 0) {
          return LpOutcome{LpStatus::Infeasible, Rational(0), {}};
        }
        break;
      case LpRow::Kind::Ge:
        inequalities.push_back({std::move(coeffs), std::move(rhs)});
        break;
      case LpRow::Kind::Le: {
        for (Rational& c : coeffs) c = -c;
        inequalities.push_back({std::move(coeffs), -rhs});
        break;
      }
    }
  }

  bool minimize = problem.sense == Sense::Min;
  bool found = false;
  Rational best;
  std::vector<Rational> best_point;

  auto feasible = [&](const std::vector<Rational>& x) {
    for (const LpRow& row : problem.rows) {
      Rational lhs = row.form.constant;
      for (std::size_t j = 0; j < n; ++j) lhs += row.form.coeffs[j] * x[j];
      bool ok = row.kind == LpRow::Kind::Eq   ? lhs == row.rhs
                : row.kind == LpRow::Kind::Ge ? lhs >= row.rhs
                                              : lhs <= row.rhs;
      if (!ok) return false;
    }
    return true;
  };
  auto consider = [&](const std::vector<Rational>& x) {
    if (!feasible(x)) return;
    Rational value = problem.objective.constant;
    for (std::size_t j = 0; j < n; ++j) {
      value += problem.objective.coeffs[j] * x[j];
    }
    if (!found || (minimize ? value < best : value > best)) {
      found = true;
      best = value;
      best_point = x;
    }
  };

  // Depth-first choice of active inequalities, pruning dependent rows so
  // only rank-increasing activations are explored.
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (eqs.rank() == n) {
      consider(eqs.solve_point());
      return;
    }
    for (std::size_t k = next; k < inequalities.size(); ++k) {
      if (eqs.add(inequalities[k].coeffs, inequalities[k].rhs) == 1) {
        self(self, k + 1);
        eqs.pop();
      }
    }
  };
  recurse(recurse, 0);

  if (!found) return LpOutcome{LpStatus::Infeasible, Rational(0), {}};
  return LpOutcome{LpStatus::Optimal, best, best_point};
}

}  // namespace syllog
