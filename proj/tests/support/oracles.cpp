#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rphouse/lp.hpp"

namespace oracles {

using rphouse::classify;
using rphouse::CostMatrix;
using rphouse::RMatrix;
using rphouse::Sign;
using rphouse::SignTolerance;

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<int>> all_cycles(int n, int min_len) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) members.push_back(v);
    }
    if (static_cast<int>(members.size()) < min_len) continue;
    // Anchor at the smallest member, permute the rest.
    std::vector<int> rest(members.begin() + 1, members.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> cyc{members.front()};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      out.push_back(std::move(cyc));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

double brute_min_assignment(const CostMatrix& costs, std::vector<int>* best_sigma) {
  const int n = costs.size();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& perm : all_permutations(n)) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += costs(i, perm[i]);
    if (total < best) {
      best = total;
      if (best_sigma) *best_sigma = perm;
    }
  }
  return best;
}

double brute_bottleneck(const CostMatrix& costs, std::vector<int>* best_sigma) {
  const int n = costs.size();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& perm : all_permutations(n)) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) worst = std::max(worst, costs(i, perm[i]));
    if (worst < best) {
      best = worst;
      if (best_sigma) *best_sigma = perm;
    }
  }
  return best;
}

bool brute_cyclically_consistent(const RMatrix& r, SignTolerance tol) {
  const int n = r.size();
  for (const auto& cyc : all_cycles(n, 2)) {
    const int p = static_cast<int>(cyc.size());
    bool all_nonpositive = true;
    bool some_strict = false;
    for (int k = 0; k < p; ++k) {
      const Sign s = classify(r(cyc[k], cyc[(k + 1) % p]), tol);
      if (s == Sign::Positive) {
        all_nonpositive = false;
        break;
      }
      if (s == Sign::Negative) some_strict = true;
    }
    if (all_nonpositive && some_strict) return false;
  }
  return true;
}

bool brute_cyclically_monotone(const CostMatrix& m, SignTolerance tol) {
  const int n = m.size();
  for (const auto& cyc : all_cycles(n, 2)) {
    const int p = static_cast<int>(cyc.size());
    double total = 0.0;
    for (int k = 0; k < p; ++k) {
      total += m(cyc[k], cyc[(k + 1) % p]) - m(cyc[k], cyc[k]);
    }
    if (total < -tol.tau) return false;
  }
  return true;
}

bool brute_has_increasing_partition(const RMatrix& r, SignTolerance tol) {
  const int n = r.size();
  for (const auto& perm : all_permutations(n)) {
    bool all_strict = true;
    for (int i = 0; i < n && all_strict; ++i) {
      all_strict = classify(r(i, perm[i]), tol) == Sign::Negative;
    }
    if (all_strict) return true;
  }
  return false;
}

namespace {

double game_value_over_columns(const RMatrix& r, const std::vector<std::vector<int>>& sigmas,
                               double lambda_floor) {
  // Variables: lambda_0.., then t; maximize t subject to
  // t <= sum_i lambda_i R_{i sigma(i)} for every column sigma.
  const int n = r.size();
  rphouse::lp::LinearProgram prog;
  prog.objective.assign(n + 1, 0.0);
  prog.objective[n] = 1.0;
  prog.lower_bounds.assign(n + 1, std::optional<double>(lambda_floor));
  prog.lower_bounds[n] = std::nullopt;
  for (const auto& sigma : sigmas) {
    std::vector<double> row(n + 1, 0.0);
    row[n] = 1.0;
    for (int i = 0; i < n; ++i) row[i] -= r(i, sigma[i]);
    prog.add_ineq(std::move(row), 0.0);
  }
  std::vector<double> simplex_row(n + 1, 0.0);
  std::fill(simplex_row.begin(), simplex_row.begin() + n, 1.0);
  prog.add_eq(std::move(simplex_row), 1.0);
  rphouse::lp::Outcome out = rphouse::lp::solve(prog);
  if (!out.optimal()) throw std::logic_error("oracle game LP did not solve");
  return out.value;
}

}  // namespace

double brute_game_value(const RMatrix& r, double lambda_floor) {
  return game_value_over_columns(r, all_permutations(r.size()), lambda_floor);
}

double brute_index_g(const RMatrix& r) {
  const int n = r.size();
  std::vector<std::vector<int>> columns;
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  columns.push_back(identity);
  for (const auto& cyc : all_cycles(n, 2)) {
    std::vector<int> sigma = identity;
    const int p = static_cast<int>(cyc.size());
    for (int k = 0; k < p; ++k) sigma[cyc[k]] = cyc[(k + 1) % p];
    columns.push_back(std::move(sigma));
  }
  return game_value_over_columns(r, columns, 0.0);
}

bool brute_has_rationalizable_coherent_subset(const RMatrix& r, SignTolerance tol) {
  const int n = r.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) members.push_back(v);
    }
    bool coherent = true;
    for (int i : members) {
      for (int j = 0; j < n && coherent; ++j) {
        if (!(mask >> j & 1) && classify(r(i, j), tol) == Sign::Negative) coherent = false;
      }
      if (!coherent) break;
    }
    if (!coherent) continue;
    const int m = static_cast<int>(members.size());
    std::vector<double> sub(static_cast<size_t>(m) * m, 0.0);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) sub[static_cast<size_t>(a) * m + b] = r(members[a], members[b]);
      }
    }
    if (brute_cyclically_consistent(RMatrix(m, std::move(sub)), tol)) return true;
  }
  return false;
}

bool brute_is_pareto(const CostMatrix& c, const std::vector<int>& sigma, SignTolerance tol) {
  const int n = c.size();
  for (const auto& rho : all_permutations(n)) {
    bool weak_all = true;
    bool strict_some = false;
    for (int i = 0; i < n && weak_all; ++i) {
      const Sign s = classify(c(i, rho[i]) - c(i, sigma[i]), tol);
      if (s == Sign::Positive) weak_all = false;
      if (s == Sign::Negative) strict_some = true;
    }
    if (weak_all && strict_some) return false;
  }
  return true;
}

bool brute_coalition_improves(const CostMatrix& c, const std::vector<int>& sigma) {
  const int n = c.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) members.push_back(v);
    }
    std::vector<int> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      bool all_strict = true;
      for (size_t k = 0; k < members.size() && all_strict; ++k) {
        all_strict = c(members[k], members[order[k]]) < c(members[k], sigma[members[k]]);
      }
      if (all_strict) return true;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return false;
}

}  // namespace oracles
