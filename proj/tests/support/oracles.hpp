#pragma once

// Brute-force oracles used by the unit and acceptance suites. Everything here
// works from definitions: permutation or cycle enumeration, or an explicit LP
// with one constraint per pure strategy. None of it shares code with the
// solvers under test beyond the generic simplex.

#include <optional>
#include <vector>

#include "rphouse/model.hpp"

namespace oracles {

std::vector<std::vector<int>> all_permutations(int n);

// All simple cycles with at least `min_len` vertices, each listed starting at
// its smallest vertex.
std::vector<std::vector<int>> all_cycles(int n, int min_len);

double brute_min_assignment(const rphouse::CostMatrix& costs,
                            std::vector<int>* best_sigma = nullptr);

double brute_bottleneck(const rphouse::CostMatrix& costs, std::vector<int>* best_sigma = nullptr);

// Cyclical consistency straight from the definition, by cycle enumeration.
bool brute_cyclically_consistent(const rphouse::RMatrix& r, rphouse::SignTolerance tol = {});

// Cyclical monotonicity straight from the definition.
bool brute_cyclically_monotone(const rphouse::CostMatrix& m, rphouse::SignTolerance tol = {});

bool brute_has_increasing_partition(const rphouse::RMatrix& r, rphouse::SignTolerance tol = {});

// Matrix-game values with one LP column per permutation (or per one-cycle
// permutation for G); lambda_floor is 0 for A and eps for A*.
double brute_game_value(const rphouse::RMatrix& r, double lambda_floor = 0.0);
double brute_index_g(const rphouse::RMatrix& r);

// Weak-rationalizability oracle: some nonempty coherent subset has a cyclically
// consistent restriction.
bool brute_has_rationalizable_coherent_subset(const rphouse::RMatrix& r,
                                              rphouse::SignTolerance tol = {});

// Weak-domination Pareto audit by permutation enumeration: some permutation
// weakly improves every individual and strictly improves at least one.
bool brute_is_pareto(const rphouse::CostMatrix& c, const std::vector<int>& sigma,
                     rphouse::SignTolerance tol = {});

// Core audit for TTC outputs: some coalition can reallocate its own endowed
// houses so that every member is strictly better off than under sigma.
bool brute_coalition_improves(const rphouse::CostMatrix& c, const std::vector<int>& sigma);

}  // namespace oracles
