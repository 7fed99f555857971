#pragma once

#include <optional>
#include <vector>

#include "rphouse/consistency.hpp"
#include "rphouse/indices.hpp"
#include "rphouse/model.hpp"

namespace rphouse {

// House prices in dollars; pi[j] is the price of house j.
struct PriceSystem {
  std::vector<double> pi;
};

// A blocked allocation carries the trading cycle of individuals who would
// all weakly gain from the circular trade, at least one strictly.
struct ParetoVerdict {
  std::optional<Cycle> blocking;

  bool efficient() const { return !blocking.has_value(); }
};

// Pareto audit of an allocation: relabel houses by their current holders
// (reducing sigma to the identity) and test cyclical consistency of
// R_ij = c_{i sigma(j)} - c_{i sigma(i)}.
ParetoVerdict is_pareto(const CostMatrix& c, const Allocation& sigma, SignTolerance tol = {});

// Prices supporting the identity allocation as a no-trade equilibrium:
// pi = -v from an Afriat certificate of r_from_costs(c), re-verified against
// the equilibrium implications R_ij < 0 => pi_j > pi_i and
// R_ij <= 0 => pi_j >= pi_i. Nothing exactly when the identity allocation is
// not Pareto efficient.
std::optional<PriceSystem> no_trade_prices(const CostMatrix& c, SignTolerance tol = {});

// Direct check of the no-trade implications for a given price system.
bool verify_no_trade(const CostMatrix& c, const PriceSystem& prices, SignTolerance tol = {});

// Houses individual i can afford: { j : pi_j <= pi_i }.
std::vector<int> budget_set(const PriceSystem& prices, int i, SignTolerance tol = {});

// Gale's top-trading-cycles procedure from the endowment "house i to
// individual i". Each round every remaining individual points at her
// cheapest remaining house (ties to the smallest house index); the pointing
// cycles trade and leave. The result is Pareto efficient.
Allocation top_trading_cycles(const CostMatrix& c, SignTolerance tol = {});

// Utilitarian distance to the assignment-efficient frontier:
// sum_i lambda_i c_ii minus the optimal assignment value for
// K_ij = lambda_i c_ij. Nonnegative; zero iff the identity is optimal for
// these weights. Weights default to uniform.
double welfare_gap(const CostMatrix& c,
                   const std::optional<SimplexWeights>& weights = std::nullopt);

}  // namespace rphouse
