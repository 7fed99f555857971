#include "rphouse/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rphouse::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const LinearProgram& p) {
  const size_t nv = p.objective.size();
  if (nv == 0) throw std::invalid_argument("lp: no variables");
  if (p.lower_bounds.size() != nv) throw std::invalid_argument("lp: lower_bounds size mismatch");
  if (p.ineq_lhs.size() != p.ineq_rhs.size()) throw std::invalid_argument("lp: inequality size mismatch");
  if (p.eq_lhs.size() != p.eq_rhs.size()) throw std::invalid_argument("lp: equality size mismatch");
  auto check_rows = [nv](const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs) {
    for (const auto& row : rows) {
      if (row.size() != nv) throw std::invalid_argument("lp: constraint row size mismatch");
      for (double a : row) {
        if (!std::isfinite(a)) throw std::invalid_argument("lp: nonfinite coefficient");
      }
    }
    for (double b : rhs) {
      if (!std::isfinite(b)) throw std::invalid_argument("lp: nonfinite right-hand side");
    }
  };
  check_rows(p.ineq_lhs, p.ineq_rhs);
  check_rows(p.eq_lhs, p.eq_rhs);
  for (double c : p.objective) {
    if (!std::isfinite(c)) throw std::invalid_argument("lp: nonfinite objective coefficient");
  }
  for (const auto& lb : p.lower_bounds) {
    if (lb && !std::isfinite(*lb)) throw std::invalid_argument("lp: nonfinite lower bound");
  }
}

// Tableau in canonical form over columns [structural | slack | artificial],
// with the reduced-cost row stored last: cost_row[j] = z_j - c_j, so a
// maximization step enters the smallest column with a negative entry
// (Bland's rule) and stops when none remains.
class Simplex {
 public:
  Simplex(const LinearProgram& p, const SolverOptions& opt) : opt_(opt) {
    // Shift bounded variables to y >= 0, split free ones into y+ - y-.
    const int nv = p.num_vars();
    for (int k = 0; k < nv; ++k) {
      if (p.lower_bounds[k]) {
        shift_.push_back(*p.lower_bounds[k]);
        cols_.push_back({k, 1.0});
      } else {
        shift_.push_back(0.0);
        cols_.push_back({k, 1.0});
        cols_.push_back({k, -1.0});
      }
    }
    ns_ = static_cast<int>(cols_.size());
    mi_ = static_cast<int>(p.ineq_lhs.size());
    me_ = static_cast<int>(p.eq_lhs.size());
    m_ = mi_ + me_;

    // Count artificial columns: equality rows always get one; inequality
    // rows only when the slack ends up with coefficient -1 (negative rhs).
    std::vector<double> shifted_rhs(m_);
    std::vector<char> flipped(m_, 0);
    for (int r = 0; r < m_; ++r) {
      const auto& row = r < mi_ ? p.ineq_lhs[r] : p.eq_lhs[r - mi_];
      double b = r < mi_ ? p.ineq_rhs[r] : p.eq_rhs[r - mi_];
      for (int k = 0; k < nv; ++k) b -= row[k] * shift_[k];
      shifted_rhs[r] = b;
      flipped[r] = b < 0.0;
    }
    na_ = me_;
    for (int r = 0; r < mi_; ++r) na_ += flipped[r];

    ncols_ = ns_ + mi_ + na_;
    width_ = ncols_ + 1;  // + rhs
    tab_.assign(static_cast<size_t>(m_ + 1) * width_, 0.0);
    basis_.assign(m_, -1);
    is_artificial_.assign(ncols_, 0);
    banned_.assign(ncols_, 0);

    int next_art = ns_ + mi_;
    for (int r = 0; r < m_; ++r) {
      const auto& row = r < mi_ ? p.ineq_lhs[r] : p.eq_lhs[r - mi_];
      const double sgn = flipped[r] ? -1.0 : 1.0;
      double* t = tab_row(r);
      for (int c = 0; c < ns_; ++c) t[c] = sgn * row[cols_[c].var] * cols_[c].sign;
      if (r < mi_) t[ns_ + r] = sgn;  // slack
      t[ncols_] = sgn * shifted_rhs[r];
      if (r < mi_ && !flipped[r]) {
        basis_[r] = ns_ + r;
      } else {
        t[next_art] = 1.0;
        is_artificial_[next_art] = 1;
        basis_[r] = next_art++;
      }
    }
  }

  Outcome run(const LinearProgram& p) {
    long pivots = 0;

    if (na_ > 0) {
      // Phase 1: maximize -(sum of artificials).
      std::vector<double> cost(ncols_, 0.0);
      for (int c = 0; c < ncols_; ++c) {
        if (is_artificial_[c]) cost[c] = -1.0;
      }
      install_cost_row(cost);
      if (!iterate(pivots)) throw std::logic_error("lp: phase 1 unbounded");
      if (tab_row(m_)[ncols_] < -opt_.feas_tol) return Outcome{Status::Infeasible, {}, 0.0};
      purge_artificials();
    }

    // Phase 2 with the real objective.
    std::vector<double> cost(ncols_, 0.0);
    for (int c = 0; c < ns_; ++c) cost[c] = p.objective[cols_[c].var] * cols_[c].sign;
    install_cost_row(cost);
    if (!iterate(pivots)) return Outcome{Status::Unbounded, {}, 0.0};

    // Recover original variables and recompute the value directly.
    std::vector<double> y(ncols_, 0.0);
    for (int r = 0; r < m_; ++r) y[basis_[r]] = tab_row(r)[ncols_];
    std::vector<double> z = shift_;
    for (int c = 0; c < ns_; ++c) z[cols_[c].var] += cols_[c].sign * y[c];
    double value = 0.0;
    for (int k = 0; k < p.num_vars(); ++k) value += p.objective[k] * z[k];
    return Outcome{Status::Optimal, std::move(z), value};
  }

 private:
  struct Col {
    int var;
    double sign;
  };

  double* tab_row(int r) { return tab_.data() + static_cast<size_t>(r) * width_; }

  void install_cost_row(const std::vector<double>& cost) {
    double* d = tab_row(m_);
    for (int j = 0; j <= ncols_; ++j) d[j] = 0.0;
    for (int r = 0; r < m_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      const double* t = tab_row(r);
      for (int j = 0; j <= ncols_; ++j) d[j] += cb * t[j];
    }
    for (int j = 0; j < ncols_; ++j) d[j] -= cost[j];
  }

  // Dantzig pricing with a largest-pivot tie-break while the objective
  // moves; strict Bland's rule (smallest entering index, smallest leaving
  // basis index) once the iteration stalls on degenerate pivots, which
  // restores the termination guarantee. Returns false when unbounded.
  bool iterate(long& pivots) {
    bool bland = false;
    int stalled = 0;
    const int stall_limit = 100 + 2 * m_;
    double last_objective = tab_row(m_)[ncols_];
    for (;;) {
      const double* d = tab_row(m_);
      int enter = -1;
      if (bland) {
        for (int j = 0; j < ncols_; ++j) {
          if (!banned_[j] && d[j] < -opt_.pivot_tol) {
            enter = j;
            break;
          }
        }
      } else {
        double most = -opt_.pivot_tol;
        for (int j = 0; j < ncols_; ++j) {
          if (!banned_[j] && d[j] < most) {
            most = d[j];
            enter = j;
          }
        }
      }
      if (enter < 0) return true;

      double best = kInf;
      for (int r = 0; r < m_; ++r) {
        const double a = tab_row(r)[enter];
        if (a <= opt_.pivot_tol) continue;
        best = std::min(best, tab_row(r)[ncols_] / a);
      }
      if (best == kInf) return false;
      const double tie = 1e-9 * (1.0 + std::fabs(best));
      int leave = -1;
      double leave_size = 0.0;
      for (int r = 0; r < m_; ++r) {
        const double a = tab_row(r)[enter];
        if (a <= opt_.pivot_tol) continue;
        if (tab_row(r)[ncols_] / a > best + tie) continue;
        if (bland ? (leave < 0 || basis_[r] < basis_[leave]) : a > leave_size) {
          leave = r;
          leave_size = a;
        }
      }
      pivot(leave, enter);
      if (++pivots > opt_.max_pivots) throw std::runtime_error("lp: pivot limit exceeded");

      const double objective = tab_row(m_)[ncols_];
      if (objective > last_objective + 1e-12 * (1.0 + std::fabs(objective))) {
        last_objective = objective;
        stalled = 0;
        bland = false;
      } else if (++stalled > stall_limit) {
        bland = true;
      }
    }
  }

  void pivot(int leave, int enter) {
    double* pr = tab_row(leave);
    const double inv = 1.0 / pr[enter];
    for (int j = 0; j <= ncols_; ++j) pr[j] *= inv;
    pr[enter] = 1.0;
    for (int r = 0; r <= m_; ++r) {
      if (r == leave) continue;
      double* t = tab_row(r);
      const double f = t[enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= ncols_; ++j) t[j] -= f * pr[j];
      t[enter] = 0.0;
    }
    basis_[leave] = enter;
  }

  // After phase 1: pivot basic artificials onto real columns where possible,
  // drop redundant rows, and ban artificial columns from ever re-entering.
  void purge_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (!is_artificial_[basis_[r]]) continue;
      int target = -1;
      double target_size = opt_.pivot_tol;
      for (int j = 0; j < ns_ + mi_; ++j) {
        const double a = std::fabs(tab_row(r)[j]);
        if (a > target_size) {
          target = j;
          target_size = a;
        }
      }
      if (target >= 0) {
        pivot(r, target);
      } else {
        erase_row(r);
        --r;
      }
    }
    for (int j = 0; j < ncols_; ++j) {
      if (is_artificial_[j]) banned_[j] = 1;
    }
  }

  void erase_row(int r) {
    for (int k = r; k < m_; ++k) {
      double* dst = tab_row(k);
      const double* src = tab_row(k + 1);
      for (int j = 0; j <= ncols_; ++j) dst[j] = src[j];
    }
    basis_.erase(basis_.begin() + r);
    --m_;
    tab_.resize(static_cast<size_t>(m_ + 1) * width_);
  }

  SolverOptions opt_;
  std::vector<Col> cols_;
  std::vector<double> shift_;
  std::vector<double> tab_;
  std::vector<int> basis_;
  std::vector<char> is_artificial_;
  std::vector<char> banned_;
  int ns_ = 0, mi_ = 0, me_ = 0, m_ = 0, na_ = 0, ncols_ = 0, width_ = 0;
};

}  // namespace

void LinearProgram::add_ineq(std::vector<double> row, double rhs) {
  ineq_lhs.push_back(std::move(row));
  ineq_rhs.push_back(rhs);
}

void LinearProgram::add_eq(std::vector<double> row, double rhs) {
  eq_lhs.push_back(std::move(row));
  eq_rhs.push_back(rhs);
}

Outcome solve(const LinearProgram& prob, const SolverOptions& opt) {
  validate(prob);
  Simplex simplex(prob, opt);
  return simplex.run(prob);
}

std::optional<std::vector<double>> feasible(const LinearProgram& prob, const SolverOptions& opt) {
  LinearProgram copy = prob;
  std::fill(copy.objective.begin(), copy.objective.end(), 0.0);
  Outcome out = solve(copy, opt);
  if (!out.optimal()) return std::nullopt;
  return std::move(out.solution);
}

}  // namespace rphouse::lp
