// Exact rational linear programming: two-phase dense simplex with Bland's
// rule. Desk-scale instances; correctness over speed.
#pragma once

#include <cstddef>
#include <vector>

#include "a2c/rational.hpp"

namespace a2c {

enum class Rel { kLe, kEq, kGe };

struct LpProblem {
  int num_vars = 0;
  std::vector<Rat> objective;  // maximized; size num_vars
  struct Row {
    std::vector<Rat> coeffs;  // size num_vars
    Rel rel = Rel::kEq;
    Rat rhs;
  };
  std::vector<Row> rows;

  void add_row(std::vector<Rat> coeffs, Rel rel, Rat rhs) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rat> x;
  Rat objective;
};

namespace lp_detail {

/// Dense simplex tableau over exact rationals. Variables are all >= 0.
class Tableau {
 public:
  // columns: structural vars, then slack/surplus, then artificials, then rhs
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> cost;     // current objective row (maximization)
  std::vector<int> basis;    // basic variable per row
  int cols = 0;

  /// Bland's rule: entering = lowest-index column with positive reduced
  /// cost; leaving = lowest-index basic variable among minimal ratios.
  /// Returns false when optimal, throws on unbounded.
  bool pivot_step(const std::vector<Rat>& reduced) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (reduced[j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) return false;
    int leave = -1;
    Rat best_ratio;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i][enter] <= 0) continue;
      const Rat ratio = a[i][cols] / a[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = static_cast<int>(i);
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw Error("lp unbounded");
    pivot(leave, enter);
    return true;
  }

  void pivot(int row, int col) {
    const Rat p = a[row][col];
    for (int j = 0; j <= cols; ++j) a[row][j] /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == row || a[i][col] == 0) continue;
      const Rat factor = a[i][col];
      for (int j = 0; j <= cols; ++j) a[i][j] -= factor * a[row][j];
    }
    basis[row] = col;
  }

  std::vector<Rat> reduced_costs(const std::vector<Rat>& c) const {
    std::vector<Rat> reduced = c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rat cb = c[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols; ++j) reduced[j] -= cb * a[i][j];
    }
    return reduced;
  }
};

}  // namespace lp_detail

/// Solves max c.x subject to the rows, x >= 0, exactly.
inline LpResult solve_lp(const LpProblem& p) {
  using lp_detail::Tableau;
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());

  // Count extra columns.
  int num_slack = 0;
  for (const auto& row : p.rows)
    if (row.rel != Rel::kEq) ++num_slack;

  Tableau t;
  t.cols = n + num_slack + m;  // artificials on every row keep phase 1 simple
  t.a.assign(m, std::vector<Rat>(t.cols + 1, Rat(0)));
  t.basis.assign(m, -1);

  int slack_at = n;
  for (int i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    Rat sign = row.rhs < 0 ? Rat(-1) : Rat(1);
    for (int j = 0; j < n; ++j) t.a[i][j] = sign * row.coeffs[j];
    t.a[i][t.cols] = sign * row.rhs;
    Rel rel = row.rel;
    if (sign < 0) rel = rel == Rel::kLe ? Rel::kGe : rel == Rel::kGe ? Rel::kLe : Rel::kEq;
    if (rel != Rel::kEq) {
      t.a[i][slack_at] = rel == Rel::kLe ? Rat(1) : Rat(-1);
      ++slack_at;
    }
    t.a[i][n + num_slack + i] = 1;  // artificial
    t.basis[i] = n + num_slack + i;
  }

  // Phase 1: maximize minus the artificial sum.
  std::vector<Rat> phase1(t.cols, Rat(0));
  for (int i = 0; i < m; ++i) phase1[n + num_slack + i] = Rat(-1);
  while (t.pivot_step(t.reduced_costs(phase1))) {
  }
  Rat artificial_sum(0);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] >= n + num_slack) artificial_sum += t.a[i][t.cols];
  if (artificial_sum != 0) return {LpStatus::kInfeasible, {}, Rat(0)};

  // Drive any residual artificials out of the basis.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n + num_slack) continue;
    int col = -1;
    for (int j = 0; j < n + num_slack; ++j)
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) t.pivot(i, col);
    // Otherwise the row is redundant (all-zero over structurals); its
    // artificial stays basic at value zero, harmless below.
  }

  // Phase 2. Artificial columns are frozen by a hugely negative cost proxy:
  // simply excluded from entering by leaving their reduced costs at <= 0.
  std::vector<Rat> phase2(t.cols, Rat(0));
  for (int j = 0; j < n; ++j) phase2[j] = p.objective[j];
  LpResult result;
  try {
    for (;;) {
      auto reduced = t.reduced_costs(phase2);
      for (int j = n + num_slack; j < t.cols; ++j) reduced[j] = Rat(-1);
      if (!t.pivot_step(reduced)) break;
    }
  } catch (const Error&) {
    return {LpStatus::kUnbounded, {}, Rat(0)};
  }

  result.status = LpStatus::kOptimal;
  result.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < n) result.x[t.basis[i]] = t.a[i][t.cols];
  result.objective = Rat(0);
  for (int j = 0; j < n; ++j) result.objective += p.objective[j] * result.x[j];
  return result;
}

}  // namespace a2c
