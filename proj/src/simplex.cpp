#include "adjmono/simplex.hpp"

#include <algorithm>
#include <optional>

namespace adjmono {

namespace {

// Dense tableau in standard equality form. Column layout:
// [structural | slack/surplus | artificial], rhs kept as the last column.
// All variables >= 0 and all rhs >= 0 throughout.
class Tableau {
 public:
  Tableau(std::size_t num_structural, const std::vector<LinearConstraint>& rows)
      : nstruct_(num_structural) {
    std::size_t nslack = 0, nart = 0;
    for (const auto& r : rows) {
      if (r.rel != Relation::Equal) ++nslack;
      // after rhs normalization, >= and == rows need an artificial start basis
      bool ge = r.rel == (r.rhs < 0 ? Relation::LessEq : Relation::GreaterEq);
      if (r.rel == Relation::Equal || ge) ++nart;
    }
    ncols_ = nstruct_ + nslack + nart;
    artificial_.assign(ncols_, false);
    rows_.assign(rows.size(), std::vector<Rational>(ncols_ + 1, Rational(0)));
    basis_.assign(rows.size(), 0);

    std::size_t next = nstruct_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Relation rel = rows[i].rel;
      Rational sign = 1;
      if (rows[i].rhs < 0) {
        // flip the row so the right-hand side is non-negative
        sign = -1;
        if (rel == Relation::LessEq)
          rel = Relation::GreaterEq;
        else if (rel == Relation::GreaterEq)
          rel = Relation::LessEq;
      }
      for (std::size_t j = 0; j < rows[i].coeffs.size(); ++j)
        rows_[i][j] = sign * rows[i].coeffs[j];
      rows_[i][ncols_] = sign * rows[i].rhs;

      if (rel == Relation::LessEq) {
        rows_[i][next] = 1;
        basis_[i] = next++;
      } else if (rel == Relation::GreaterEq) {
        rows_[i][next] = -1;  // surplus
        ++next;
      }
      if (rel != Relation::LessEq) {
        rows_[i][next] = 1;
        artificial_[next] = true;
        basis_[i] = next++;
      }
    }
  }

  bool has_artificials() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (artificial_[basis_[i]]) return true;
    return false;
  }

  /// Phase I: drive the artificial variables to zero. Returns false when the
  /// system is infeasible.
  bool phase1() {
    if (!has_artificials()) return true;
    std::vector<Rational> cost(ncols_, Rational(0));
    for (std::size_t j = 0; j < ncols_; ++j)
      if (artificial_[j]) cost[j] = -1;
    load_objective(cost);
    run(/*exclude_artificials=*/false);
    if (zval_ < 0) return false;
    drop_artificial_basics();
    return true;
  }

  /// Phase II: maximize a single structural variable.
  void maximize(std::size_t col) {
    std::vector<Rational> cost(ncols_, Rational(0));
    cost[col] = 1;
    load_objective(cost);
    run(/*exclude_artificials=*/true);
  }

  Rational value_of(std::size_t col) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == col) return rows_[i][ncols_];
    return 0;
  }

 private:
  void load_objective(const std::vector<Rational>& cost) {
    rc_ = cost;
    zval_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      zval_ += cb * rows_[i][ncols_];
      for (std::size_t j = 0; j < ncols_; ++j) rc_[j] -= cb * rows_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = rows_[r][c];
    for (auto& x : rows_[r]) x /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    const Rational f = rc_[c];
    if (f != 0) {
      for (std::size_t j = 0; j < ncols_; ++j) rc_[j] -= f * rows_[r][j];
      zval_ += f * rows_[r][ncols_];
    }
    basis_[r] = c;
  }

  void run(bool exclude_artificials) {
    for (;;) {
      // Bland: entering column is the lowest index with positive reduced cost
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (exclude_artificials && artificial_[j]) continue;
        if (rc_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols_) return;  // optimal

      // ratio test; ties broken by the smallest basic variable index (Bland)
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][ncols_] / rows_[i][enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) throw internal_error("simplex: unbounded objective");
      pivot(*leave, enter);
    }
  }

  // After phase I every artificial is zero; pivot basic ones out and drop
  // rows that turn out to be redundant equations.
  void drop_artificial_basics() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!artificial_[basis_[i]]) {
        ++i;
        continue;
      }
      std::size_t col = ncols_;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!artificial_[j] && rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < ncols_) {
        pivot(i, col);  // degenerate pivot, rhs stays zero
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t nstruct_;
  std::size_t ncols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> artificial_;
  std::vector<Rational> rc_;
  Rational zval_ = 0;
};

}  // namespace

LpResult simplex_feasible(std::size_t num_vars, std::vector<LinearConstraint> rows,
                          bool maximize_slack) {
  for (const auto& r : rows) {
    if (r.coeffs.size() != num_vars)
      throw std::invalid_argument("simplex_feasible: constraint arity mismatch");
    if (r.strict && r.rel == Relation::Equal)
      throw std::invalid_argument("simplex_feasible: an equality cannot be strict");
    if (r.strict && !maximize_slack)
      throw std::invalid_argument("simplex_feasible: strict rows require maximize_slack");
  }

  const std::size_t nstruct = num_vars + (maximize_slack ? 1 : 0);
  const std::size_t delta = num_vars;
  if (maximize_slack) {
    bool any_marked = std::any_of(rows.begin(), rows.end(),
                                  [](const LinearConstraint& r) { return r.strict; });
    for (auto& r : rows) {
      r.coeffs.resize(nstruct, Rational(0));
      if (r.rel == Relation::Equal) continue;
      if (any_marked && !r.strict) continue;
      r.coeffs[delta] = r.rel == Relation::GreaterEq ? Rational(-1) : Rational(1);
      r.strict = true;  // row carries the slack from here on
    }
    LinearConstraint cap;  // keeps the slack objective bounded
    cap.coeffs.assign(nstruct, Rational(0));
    cap.coeffs[delta] = 1;
    cap.rel = Relation::LessEq;
    cap.rhs = 1;
    rows.push_back(cap);
  }

  Tableau tab(nstruct, rows);
  LpResult res;
  if (!tab.phase1()) return res;
  if (maximize_slack) tab.maximize(delta);

  res.feasible = true;
  res.point.resize(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) res.point[j] = tab.value_of(j);
  res.slack = maximize_slack ? tab.value_of(delta) : Rational(0);
  res.strictly_feasible = maximize_slack ? res.slack > 0 : true;

  // Exactness makes the verdict checkable for free: the returned point must
  // satisfy every row at the reported slack.
  for (const auto& r : rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < num_vars; ++j) lhs += r.coeffs[j] * res.point[j];
    Rational shift = (maximize_slack && r.coeffs.size() > delta) ? r.coeffs[delta] * res.slack
                                                                 : Rational(0);
    bool ok = r.rel == Relation::Equal       ? lhs == r.rhs
              : r.rel == Relation::LessEq    ? lhs + shift <= r.rhs
                                             : lhs + shift >= r.rhs;
    if (!ok) throw internal_error("simplex: solution fails a constraint it reported satisfied");
  }
  return res;
}

}  // namespace adjmono
