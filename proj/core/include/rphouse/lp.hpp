#pragma once

#include <optional>
#include <vector>

namespace rphouse::lp {

// Dense linear program:
//   maximize  objective . z
//   s.t.      ineq_lhs[r] . z <= ineq_rhs[r]
//             eq_lhs[r]   . z == eq_rhs[r]
//             z[k] >= lower_bounds[k]   (nullopt = free variable)
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> ineq_lhs;
  std::vector<double> ineq_rhs;
  std::vector<std::vector<double>> eq_lhs;
  std::vector<double> eq_rhs;
  std::vector<std::optional<double>> lower_bounds;

  int num_vars() const { return static_cast<int>(objective.size()); }

  void add_ineq(std::vector<double> row, double rhs);
  void add_eq(std::vector<double> row, double rhs);
};

struct SolverOptions {
  double feas_tol = 1e-7;   // constraint / phase-1 feasibility tolerance
  double opt_tol = 1e-7;    // optimality guarantee reported to callers
  double pivot_tol = 1e-7;  // threshold below which a coefficient counts as zero
  long max_pivots = 1000000;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Outcome {
  Status status = Status::Infeasible;
  std::vector<double> solution;  // populated when Optimal
  double value = 0.0;            // objective at solution when Optimal

  bool optimal() const { return status == Status::Optimal; }
};

// Two-phase dense simplex. Pricing is Dantzig's rule with a largest-pivot
// tie-break; a stall of degenerate pivots switches to Bland's rule, which
// restores termination on degenerate instances. Throws std::invalid_argument
// on malformed dimensions and std::runtime_error if the pivot cap is
// exceeded.
Outcome solve(const LinearProgram& prob, const SolverOptions& opt = {});

// Phase-1 wrapper: a point satisfying all constraints, or nothing.
std::optional<std::vector<double>> feasible(const LinearProgram& prob,
                                            const SolverOptions& opt = {});

}  // namespace rphouse::lp
