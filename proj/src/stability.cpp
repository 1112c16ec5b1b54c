#include "gca/stability.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gca/simplex.hpp"

namespace gca {

namespace {

// Counts simple loops based at `start`, capped at 2: DFS over paths with
// pairwise distinct sources; closing the path back at `start` contributes the
// product of the multiplicities along it (omega as at-least-2).
std::uint64_t simple_loop_count(const PresentedGraph& g,
                                const std::string& start) {
  std::uint64_t count = 0;
  std::set<std::string> on_path{start};

  // product argument is already capped at 2
  std::function<void(const std::string&, std::uint64_t)> dfs =
      [&](const std::string& v, std::uint64_t product) {
        if (count >= 2) return;
        for (const auto& [w, m] : g.out(v)) {
          const std::uint64_t step = m.is_omega() ? 2 : std::min<std::uint64_t>(
                                                           m.count(), 2);
          const std::uint64_t next = std::min<std::uint64_t>(product * step, 2);
          if (w == start) {
            count = std::min<std::uint64_t>(count + next, 2);
            if (count >= 2) return;
          } else if (on_path.insert(w).second) {
            dfs(w, next);
            on_path.erase(w);
            if (count >= 2) return;
          }
        }
      };
  dfs(start, 1);
  return count;
}

LoopCheck run_loop_check(const PresentedGraph& g) {
  LoopCheck check;
  for (const auto& v : vertices_on_loops(g)) {
    if (!is_left_infinite(g, Vertex{v})) {
      check.pass = false;
      check.witness = v;
      break;
    }
  }
  return check;
}

void attach_fast_path(const PresentedGraph& g, StabilityReport& report) {
  const LeftInfiniteCriterion crit = left_infinite_criterion(g);
  if (!crit.applies) return;
  report.fast_path_used = true;
  if (crit.all_left_infinite != report.stable)
    throw std::logic_error(
        "source-free criterion disagrees with the stability decision");
}

}  // namespace

ConditionKReport condition_k(const PresentedGraph& g) {
  ConditionKReport report;
  report.holds = true;
  for (const auto& v : g.vertex_ids()) {
    const std::uint64_t n = simple_loop_count(g, v);
    report.loop_counts[v] = n;
    if (n == 1) report.holds = false;
  }
  return report;
}

StabilityReport is_stable(const PresentedGraph& g) {
  StabilityReport report;
  report.loop_check = run_loop_check(g);

  const TraceVerdict verdict = nonzero_bounded_trace(g);
  if (verdict.nonzero) {
    report.trace_check.pass = false;
    report.trace_check.witness = verdict.witness;
  }

  report.stable = report.loop_check.pass && report.trace_check.pass;
  attach_fast_path(g, report);
  return report;
}

StabilityReport is_stable_via_T(const PresentedGraph& g) {
  StabilityReport report;
  report.loop_check = run_loop_check(g);

  // Norm-one trace space: the cone constraints plus sum = 1, as a pure
  // feasibility question.
  const auto& ids = g.vertex_ids();
  LinearProgram lp;
  lp.num_vars = ids.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  const auto zero_row = [&] {
    return std::vector<Rational>(lp.num_vars, Rational(0));
  };
  for (const auto& v : ids) {
    if (g.has_head(v)) {
      auto row = zero_row();
      row[index[v]] = 1;
      lp.add_row(std::move(row), RowSense::EQ, Rational(0));
    }
    const Degree d = out_degree(g, Vertex{v});
    if (d.is_finite_nonzero()) {
      auto row = zero_row();
      row[index[v]] += 1;
      for (const auto& [w, m] : g.out(v)) row[index[w]] -= Rational(m.count());
      lp.add_row(std::move(row), RowSense::EQ, Rational(0));
    } else if (d.is_omega()) {
      auto row = zero_row();
      row[index[v]] -= 1;
      for (const auto& [w, m] : g.out(v)) {
        if (m.is_omega()) {
          auto forced = zero_row();
          forced[index[w]] = 1;
          lp.add_row(std::move(forced), RowSense::EQ, Rational(0));
        } else {
          row[index[w]] += Rational(m.count());
        }
      }
      lp.add_row(std::move(row), RowSense::LE, Rational(0));
    }
  }
  lp.add_row(std::vector<Rational>(lp.num_vars, Rational(1)), RowSense::EQ,
             Rational(1));

  if (auto point = find_feasible(lp)) {
    report.trace_check.pass = false;
    GraphTrace witness;
    for (std::size_t i = 0; i < ids.size(); ++i)
      witness.values[ids[i]] = (*point)[i];
    report.trace_check.witness = std::move(witness);
  }

  report.stable = report.loop_check.pass && report.trace_check.pass;
  attach_fast_path(g, report);
  return report;
}

LeftInfiniteCriterion left_infinite_criterion(const PresentedGraph& g) {
  LeftInfiniteCriterion crit;
  crit.applies = sources(g).empty();
  crit.all_left_infinite = true;
  for (const auto& v : g.vertex_ids()) {
    if (!is_left_infinite(g, Vertex{v})) {
      crit.all_left_infinite = false;
      break;
    }
  }
  return crit;
}

}  // namespace gca
