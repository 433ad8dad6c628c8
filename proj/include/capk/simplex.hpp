#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace capk::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Feasibility problem in bounded form:
//   var_lo <= x <= var_hi,   row.lo <= row.terms . x <= row.hi.
struct BoundedProblem {
  struct Row {
    std::vector<std::pair<std::size_t, double>> terms;
    double lo = -kInf;
    double hi = kInf;
  };
  std::vector<double> var_lo;
  std::vector<double> var_hi;
  std::vector<Row> rows;

  std::size_t num_vars() const { return var_lo.size(); }
};

enum class PivotRule {
  // Smallest eligible index for both entering and leaving variables.
  Bland,
  // Most negative reduced cost; falls back to Bland's rule after a run of
  // degenerate pivots and stays there until the next non-degenerate one.
  DantzigWithBlandFallback,
};

struct SimplexOptions {
  PivotRule rule = PivotRule::DantzigWithBlandFallback;
  double feasibility_tol = 1e-9;
  double pivot_tol = 1e-7;
  std::size_t refactor_interval = 64;
  std::size_t degenerate_run_limit = 50;
  // 0 selects 20 * (rows + vars) + 10000.
  std::size_t max_iterations = 0;
};

struct PhaseOneResult {
  bool feasible = false;
  std::vector<double> values;  // structural values when feasible
  std::size_t iterations = 0;
};

// Primal phase-1 revised simplex minimizing the sum of bound violations of
// the row activities. Deterministic for fixed options. Throws SolverError
// when it cannot reach a verdict.
PhaseOneResult solve_phase_one(const BoundedProblem& problem, const SimplexOptions& options = {});

// Largest violation of any bound or row of `problem` at `x`.
double max_violation(const BoundedProblem& problem, const std::vector<double>& x);

}  // namespace capk::lp
