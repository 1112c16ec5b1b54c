#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gca/rational.hpp"

namespace gca {

// Linear constraints over variables x_0..x_{n-1} with x >= 0 implicit.
// GE rows are expressed by negating an LE row.
enum class RowSense { LE, EQ };

struct LpRow {
  std::vector<Rational> coeffs;  // length num_vars
  RowSense sense = RowSense::LE;
  Rational rhs;
};

struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LpRow> rows;

  void add_row(std::vector<Rational> coeffs, RowSense sense, Rational rhs);
};

enum class LpStatus { OPTIMAL, INFEASIBLE, UNBOUNDED };

struct LpResult {
  LpStatus status = LpStatus::INFEASIBLE;
  Rational objective;             // meaningful when OPTIMAL
  std::vector<Rational> solution; // length num_vars when OPTIMAL
};

// Two-phase exact-rational simplex with Bland's rule (deterministic, no
// cycling).  Maximizes objective . x subject to lp and x >= 0.
LpResult maximize(const LinearProgram& lp,
                  const std::vector<Rational>& objective);

// Phase-one feasibility only: a point of the polyhedron if one exists.
std::optional<std::vector<Rational>> find_feasible(const LinearProgram& lp);

}  // namespace gca
