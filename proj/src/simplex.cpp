#include "gca/simplex.hpp"

#include <cstddef>
#include <set>

#include "gca/error.hpp"

namespace gca {

void LinearProgram::add_row(std::vector<Rational> coeffs, RowSense sense,
                            Rational rhs) {
  if (coeffs.size() != num_vars)
    throw Error("LP row has " + std::to_string(coeffs.size()) +
                " coefficients, expected " + std::to_string(num_vars));
  rows.push_back(LpRow{std::move(coeffs), sense, std::move(rhs)});
}

namespace {

// Dense tableau kept in basis form: every row i has coefficient 1 in its
// basic column basis[i] and 0 there in all other rows.  Bland's rule keeps
// the walk finite.
class Tableau {
 public:
  Tableau(std::size_t ncols) : ncols_(ncols) {}

  void add_row(std::vector<Rational> coeffs, Rational rhs, std::size_t basic) {
    coeffs.resize(ncols_, Rational(0));
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
    basis_.push_back(basic);
  }

  void set_objective(const std::vector<Rational>& c) {
    obj_.assign(ncols_, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) obj_[j] = c[j];
    obj_val_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = basis_[i] < c.size() ? c[basis_[i]] : zero_;
      if (cb == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= cb * rows_[i][j];
      obj_val_ += cb * rhs_[i];
    }
  }

  void ban(std::size_t col) { banned_.insert(col); }

  // Maximizes the current objective.  Returns false on unboundedness.
  bool run() {
    for (;;) {
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (obj_[j] > 0 && banned_.count(j) == 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols_) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& a : rows_[r]) a /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[r][j];
      obj_val_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Pivots artificial columns out of the basis where possible; drops rows
  // that turn out redundant.  `real_cols` = columns that are not artificial.
  void purge_artificials(std::size_t real_cols) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < real_cols) {
        ++i;
        continue;
      }
      std::size_t c = real_cols;
      for (std::size_t j = 0; j < real_cols; ++j) {
        if (rows_[i][j] != 0) {
          c = j;
          break;
        }
      }
      if (c < real_cols) {
        pivot(i, c);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  const Rational& objective() const { return obj_val_; }

  std::vector<Rational> extract(std::size_t nvars) const {
    std::vector<Rational> x(nvars, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < nvars) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  std::size_t ncols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> obj_;
  Rational obj_val_;
  std::set<std::size_t> banned_;
  const Rational zero_{0};
};

}  // namespace

LpResult maximize(const LinearProgram& lp,
                  const std::vector<Rational>& objective) {
  if (objective.size() != lp.num_vars)
    throw Error("objective length does not match variable count");

  // Normalize: rhs >= 0 (negating flips LE to GE); LE rows get a slack that
  // can start basic, GE and EQ rows get an artificial.
  struct Norm {
    std::vector<Rational> coeffs;
    Rational rhs;
    enum { LE, GE, EQ } sense;
  };
  std::vector<Norm> norm;
  for (const auto& row : lp.rows) {
    Norm n{row.coeffs, row.rhs, row.sense == RowSense::EQ ? Norm::EQ : Norm::LE};
    if (n.rhs < 0) {
      for (auto& a : n.coeffs) a = -a;
      n.rhs = -n.rhs;
      if (n.sense == Norm::LE) n.sense = Norm::GE;
    }
    norm.push_back(std::move(n));
  }

  std::size_t nslack = 0, nart = 0;
  for (const auto& n : norm) {
    if (n.sense != Norm::EQ) ++nslack;
    if (n.sense != Norm::LE) ++nart;
  }
  const std::size_t slack0 = lp.num_vars;
  const std::size_t art0 = slack0 + nslack;
  const std::size_t ncols = art0 + nart;

  Tableau t(ncols);
  std::size_t si = slack0, ai = art0;
  for (auto& n : norm) {
    std::vector<Rational> coeffs = std::move(n.coeffs);
    coeffs.resize(ncols, Rational(0));
    std::size_t basic;
    if (n.sense == Norm::LE) {
      coeffs[si] = 1;
      basic = si++;
    } else if (n.sense == Norm::GE) {
      coeffs[si] = -1;
      ++si;
      coeffs[ai] = 1;
      basic = ai++;
    } else {
      coeffs[ai] = 1;
      basic = ai++;
    }
    t.add_row(std::move(coeffs), std::move(n.rhs), basic);
  }

  if (nart > 0) {
    std::vector<Rational> phase1(ncols, Rational(0));
    for (std::size_t j = art0; j < ncols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.run();  // bounded above by 0, cannot be unbounded
    if (t.objective() != 0) return LpResult{LpStatus::INFEASIBLE, {}, {}};
    t.purge_artificials(art0);
    for (std::size_t j = art0; j < ncols; ++j) t.ban(j);
  }

  std::vector<Rational> phase2(ncols, Rational(0));
  for (std::size_t j = 0; j < lp.num_vars; ++j) phase2[j] = objective[j];
  t.set_objective(phase2);
  if (!t.run()) return LpResult{LpStatus::UNBOUNDED, {}, {}};
  return LpResult{LpStatus::OPTIMAL, t.objective(), t.extract(lp.num_vars)};
}

std::optional<std::vector<Rational>> find_feasible(const LinearProgram& lp) {
  LpResult r = maximize(lp, std::vector<Rational>(lp.num_vars, Rational(0)));
  if (r.status != LpStatus::OPTIMAL) return std::nullopt;
  return std::move(r.solution);
}

}  // namespace gca
