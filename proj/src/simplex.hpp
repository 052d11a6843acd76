#pragma once

// Dense two-phase tableau simplex, templated on the scalar field.

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <cstddef>
#include <vector>

#include "distdom/error.hpp"
#include "distdom/lp.hpp"

namespace distdom::detail {

struct ExactField {
  using Scalar = Rational;
  static Scalar from(const Rational& q) { return q; }
  static bool negative(const Scalar& x) { return sgn(x) < 0; }
  static bool positive(const Scalar& x) { return sgn(x) > 0; }
  static bool zero(const Scalar& x) { return sgn(x) == 0; }
  // a/b < c/d for positive b, d.
  static int compare_ratio(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    return cmp(a * d, c * b);
  }
  static void clean(Scalar&) {}
};

struct FloatField {
  using Scalar = double;
  static Scalar from(const Rational& q) { return q.get_d(); }
  static bool negative(Scalar x) { return x < -kFloatTolerance; }
  static bool positive(Scalar x) { return x > kFloatTolerance; }
  static bool zero(Scalar x) { return std::fabs(x) <= kFloatTolerance; }
  static void clean(Scalar& x) {
    if (std::fabs(x) < 1e-13) x = 0.0;
  }
};

/// Minimizes cost.x subject to rows (already shifted so that x >= 0 and
/// every rhs is non-negative).
template <class Field>
class Tableau {
 public:
  using T = typename Field::Scalar;

  struct Row {
    std::vector<T> coef;  // over the structural columns
    Relation relation;
    T rhs;
  };

  struct Result {
    LpStatus status;
    std::vector<T> x;
    std::size_t pivots;
  };

  static Result run(std::size_t num_structural, const std::vector<T>& cost, const std::vector<Row>& rows,
                    std::size_t pivot_limit) {
    Tableau t(num_structural, cost, rows, pivot_limit);
    return t.solve();
  }

 private:
  Tableau(std::size_t nstruct, const std::vector<T>& cost, const std::vector<Row>& rows, std::size_t pivot_limit)
      : nstruct_(nstruct), cost_(cost), pivot_limit_(pivot_limit) {
    std::size_t slack = 0, artificial = 0;
    for (const auto& row : rows) {
      if (row.relation != Relation::Equal) ++slack;
      if (row.relation != Relation::LessEqual) ++artificial;
    }
    art_begin_ = nstruct_ + slack;
    ncols_ = art_begin_ + artificial;
    std::size_t next_slack = nstruct_, next_art = art_begin_;
    for (const auto& row : rows) {
      std::vector<T> line(ncols_ + 1, T(0));
      for (std::size_t j = 0; j < nstruct_; ++j) line[j] = row.coef[j];
      line[ncols_] = row.rhs;
      std::size_t basic = 0;
      switch (row.relation) {
        case Relation::LessEqual:
          line[next_slack] = T(1);
          basic = next_slack++;
          break;
        case Relation::GreaterEqual:
          line[next_slack++] = T(-1);
          line[next_art] = T(1);
          basic = next_art++;
          break;
        case Relation::Equal:
          line[next_art] = T(1);
          basic = next_art++;
          break;
      }
      table_.push_back(std::move(line));
      basis_.push_back(basic);
    }
    original_ = table_;
  }

  Result solve() {
    if (ncols_ > art_begin_) {
      // Phase 1: minimize the sum of artificials.
      phase_cost_.assign(ncols_, T(0));
      for (std::size_t j = art_begin_; j < ncols_; ++j) phase_cost_[j] = T(1);
      recompute_objective_row();
      iterate(ncols_);
      // z_[ncols_] holds minus the phase-1 objective.
      if (Field::negative(z_[ncols_])) return {LpStatus::Infeasible, {}, pivots_};
      drive_out_artificials();
    }
    // Phase 2 over structural and slack columns only.
    phase_cost_.assign(ncols_, T(0));
    for (std::size_t j = 0; j < nstruct_; ++j) phase_cost_[j] = cost_[j];
    recompute_objective_row();
    if (!iterate(art_begin_)) return {LpStatus::Unbounded, {}, pivots_};
    std::vector<T> x(nstruct_, T(0));
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (basis_[i] < nstruct_) x[basis_[i]] = table_[i][ncols_];
    return {LpStatus::Optimal, std::move(x), pivots_};
  }

  void recompute_objective_row() {
    z_.assign(ncols_ + 1, T(0));
    for (std::size_t j = 0; j < ncols_; ++j) z_[j] = phase_cost_[j];
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const T& c = phase_cost_[basis_[i]];
      if (!Field::zero(c)) subtract_row(z_, table_[i], c);
    }
  }

  // Float mode only: rebuild the tableau as B^-1 times the original rows for
  // the current basis (Gauss-Jordan, partial pivoting), then the objective
  // row. Keeps rounding error from piling up over long pivot sequences.
  void refactor() {
    since_refactor_ = 0;
    if constexpr (std::is_same_v<T, double>) {
      const std::size_t m = table_.size(), w = ncols_ + 1;
      std::vector<std::vector<double>> aug(m, std::vector<double>(m + w));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) aug[i][k] = original_[i][basis_[k]];
        for (std::size_t j = 0; j < w; ++j) aug[i][m + j] = original_[i][j];
      }
      for (std::size_t k = 0; k < m; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < m; ++i)
          if (std::fabs(aug[i][k]) > std::fabs(aug[p][k])) p = i;
        if (std::fabs(aug[p][k]) < 1e-12) return;  // numerically singular: keep the current tableau
        std::swap(aug[p], aug[k]);
        const double inv = 1.0 / aug[k][k];
        for (auto& v : aug[k]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
          if (i == k || aug[i][k] == 0.0) continue;
          const double f = aug[i][k];
          for (std::size_t j = k; j < m + w; ++j) aug[i][j] -= f * aug[k][j];
        }
      }
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < w; ++j) {
          double v = aug[k][m + j];
          table_[k][j] = std::fabs(v) < 1e-12 ? 0.0 : v;
        }
        for (std::size_t i = 0; i < m; ++i) table_[i][basis_[k]] = i == k ? 1.0 : 0.0;
      }
      recompute_objective_row();
    }
  }

  // Bland's rule: lowest-index improving column, lowest-index basic variable
  // among tied ratios. Returns false on an unbounded direction.
  bool iterate(std::size_t column_limit) {
    constexpr bool kFloat = std::is_same_v<T, double>;
    for (;;) {
      if (kFloat && since_refactor_ >= kRefactorEvery) refactor();
      std::size_t enter = column_limit;
      for (std::size_t j = 0; j < column_limit; ++j)
        if (Field::negative(z_[j])) {
          enter = j;
          break;
        }
      if (enter == column_limit) {
        // Confirm optimality on a freshly rebuilt tableau.
        if (kFloat && since_refactor_ > 0) {
          refactor();
          continue;
        }
        return true;
      }
      std::size_t leave = table_.size();
      if constexpr (std::is_same_v<T, double>) {
        constexpr double kPivot = 1e-7;
        // Two passes: the true minimum ratio, then the lowest basic index
        // among rows within tolerance of it. Drifted negative rhs count as 0.
        double best = 0.0;
        bool any = false;
        for (std::size_t i = 0; i < table_.size(); ++i) {
          const double a = table_[i][enter];
          if (a <= kPivot) continue;
          const double ratio = std::max(table_[i][ncols_], 0.0) / a;
          if (!any || ratio < best) best = ratio;
          any = true;
        }
        for (std::size_t i = 0; any && i < table_.size(); ++i) {
          const double a = table_[i][enter];
          if (a <= kPivot) continue;
          const double ratio = std::max(table_[i][ncols_], 0.0) / a;
          if (ratio <= best + kFloatTolerance * (1.0 + best) && (leave == table_.size() || basis_[i] < basis_[leave]))
            leave = i;
        }
      } else {
        for (std::size_t i = 0; i < table_.size(); ++i) {
          const T& a = table_[i][enter];
          if (!Field::positive(a)) continue;
          if (leave == table_.size()) {
            leave = i;
            continue;
          }
          int c = Field::compare_ratio(table_[i][ncols_], a, table_[leave][ncols_], table_[leave][enter]);
          if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) leave = i;
        }
      }
      if (leave == table_.size()) {
        if (kFloat && since_refactor_ > 0) {
          refactor();
          continue;
        }
        return false;
      }
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < table_.size();) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      std::size_t col = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (!Field::zero(table_[i][j])) {
          col = j;
          break;
        }
      if (col < art_begin_) {
        pivot(i, col);
        ++i;
      } else {
        // Redundant row: every non-artificial coefficient vanished.
        table_.erase(table_.begin() + static_cast<std::ptrdiff_t>(i));
        original_.erase(original_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    if (++pivots_ > pivot_limit_) throw Error("simplex pivot limit exceeded");
    ++since_refactor_;
    auto& prow = table_[r];
    const T inv = T(1) / prow[s];
    nonzero_.clear();
    for (std::size_t j = 0; j <= ncols_; ++j) {
      if (Field::zero(prow[j])) {
        prow[j] = T(0);
        continue;
      }
      prow[j] *= inv;
      nonzero_.push_back(j);
    }
    prow[s] = T(1);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (i == r || Field::zero(table_[i][s])) continue;
      eliminate(table_[i], prow, s);
    }
    if (!Field::zero(z_[s])) eliminate(z_, prow, s);
    basis_[r] = s;
  }

  void eliminate(std::vector<T>& target, const std::vector<T>& prow, std::size_t s) {
    const T f = target[s];
    for (std::size_t j : nonzero_) {
      target[j] -= f * prow[j];
      Field::clean(target[j]);
    }
  }

  void subtract_row(std::vector<T>& target, const std::vector<T>& row, const T& factor) {
    for (std::size_t j = 0; j <= ncols_; ++j)
      if (!Field::zero(row[j])) target[j] -= factor * row[j];
  }

  std::size_t nstruct_;
  std::vector<T> cost_;
  std::size_t pivot_limit_;
  std::size_t art_begin_ = 0;
  std::size_t ncols_ = 0;
  static constexpr std::size_t kRefactorEvery = 40;

  std::vector<std::vector<T>> table_;
  std::vector<std::vector<T>> original_;
  std::vector<T> phase_cost_;
  std::size_t since_refactor_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<T> z_;
  std::vector<std::size_t> nonzero_;
  std::size_t pivots_ = 0;
};

}  // namespace distdom::detail
