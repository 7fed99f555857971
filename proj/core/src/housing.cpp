#include "rphouse/housing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rphouse/assignment.hpp"
#include "rphouse/rationalize.hpp"

namespace rphouse {

ParetoVerdict is_pareto(const CostMatrix& c, const Allocation& sigma, SignTolerance tol) {
  const int n = c.size();
  if (sigma.size() != n) throw std::invalid_argument("is_pareto: allocation size mismatch");
  std::vector<double> entries(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double own = c(i, sigma(i));
    for (int j = 0; j < n; ++j) {
      if (i != j) entries[static_cast<size_t>(i) * n + j] = c(i, sigma(j)) - own;
    }
  }
  ConsistencyVerdict verdict = check_cyclical_consistency(RMatrix(n, std::move(entries)), tol);
  return ParetoVerdict{std::move(verdict.violation)};
}

std::optional<PriceSystem> no_trade_prices(const CostMatrix& c, SignTolerance tol) {
  CertificateSearch search = find_certificate(r_from_costs(c), tol);
  if (!search.found()) return std::nullopt;
  PriceSystem prices;
  prices.pi.reserve(search.certificate->v.size());
  for (double v : search.certificate->v) prices.pi.push_back(-v);
  if (!verify_no_trade(c, prices, tol)) {
    throw std::logic_error("no_trade_prices: certificate prices failed re-verification");
  }
  return prices;
}

bool verify_no_trade(const CostMatrix& c, const PriceSystem& prices, SignTolerance tol) {
  const int n = c.size();
  if (prices.pi.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("verify_no_trade: price vector size mismatch");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Sign s = classify(c(i, j) - c(i, i), tol);
      if (s == Sign::Negative && !(prices.pi[j] > prices.pi[i])) return false;
      if (s != Sign::Positive && prices.pi[j] < prices.pi[i] - tol.tau) return false;
    }
  }
  return true;
}

std::vector<int> budget_set(const PriceSystem& prices, int i, SignTolerance tol) {
  const int n = static_cast<int>(prices.pi.size());
  if (i < 0 || i >= n) throw std::invalid_argument("budget_set: individual out of range");
  std::vector<int> houses;
  for (int j = 0; j < n; ++j) {
    if (prices.pi[j] <= prices.pi[i] + tol.tau) houses.push_back(j);
  }
  return houses;
}

Allocation top_trading_cycles(const CostMatrix& c, SignTolerance tol) {
  const int n = c.size();
  std::vector<char> remaining(n, 1);
  std::vector<int> sigma(n, -1);
  int left = n;
  while (left > 0) {
    // Remaining houses are exactly the endowments of remaining individuals,
    // so pointing at a house is pointing at its current owner.
    std::vector<int> target(n, -1);
    for (int i = 0; i < n; ++i) {
      if (!remaining[i]) continue;
      int best = -1;
      for (int j = 0; j < n; ++j) {
        if (!remaining[j]) continue;
        if (best < 0 || classify(c(i, j) - c(i, best), tol) == Sign::Negative) best = j;
      }
      target[i] = best;
    }
    // Every functional graph contains a cycle; clear all of them this round.
    std::vector<int> state(n, 0);  // 0 untouched, 1 on path, 2 done
    for (int start = 0; start < n; ++start) {
      if (!remaining[start] || state[start] != 0) continue;
      std::vector<int> path;
      int cur = start;
      while (remaining[cur] && state[cur] == 0) {
        state[cur] = 1;
        path.push_back(cur);
        cur = target[cur];
      }
      if (remaining[cur] && state[cur] == 1) {
        // Found a new cycle: pop back to cur and assign along it.
        auto it = std::find(path.begin(), path.end(), cur);
        for (auto p = it; p != path.end(); ++p) sigma[*p] = target[*p];
      }
      for (int v : path) state[v] = 2;
    }
    for (int i = 0; i < n; ++i) {
      if (remaining[i] && sigma[i] >= 0) {
        remaining[i] = 0;
        --left;
      }
    }
  }
  return Allocation(std::move(sigma));
}

double welfare_gap(const CostMatrix& c, const std::optional<SimplexWeights>& weights) {
  const int n = c.size();
  const SimplexWeights lambda = weights ? *weights : SimplexWeights::uniform(n);
  if (lambda.size() != n) throw std::invalid_argument("welfare_gap: weight size mismatch");
  std::vector<double> scaled(static_cast<size_t>(n) * n);
  double own_total = 0.0;
  for (int i = 0; i < n; ++i) {
    own_total += lambda[i] * c(i, i);
    for (int j = 0; j < n; ++j) scaled[static_cast<size_t>(i) * n + j] = lambda[i] * c(i, j);
  }
  return own_total - min_cost_assignment(CostMatrix(n, std::move(scaled))).value;
}

}  // namespace rphouse
