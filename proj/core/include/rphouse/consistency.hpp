#pragma once

#include <optional>
#include <vector>

#include "rphouse/model.hpp"

namespace rphouse {

// An ordered list of distinct observation indices i1,...,ip, implicitly
// closed by the arc ip -> i1.
struct Cycle {
  std::vector<int> nodes;

  int length() const { return static_cast<int>(nodes.size()); }
  std::vector<int> one_based() const;
};

// Outcome of the cyclical-consistency test. A violation carries a cycle
// whose steps are all R <= 0 with at least one strictly negative.
struct ConsistencyVerdict {
  std::optional<Cycle> violation;

  bool consistent() const { return !violation.has_value(); }
};

// Tests whether every cycle with all steps R <= 0 has all steps R = 0.
// Runs on strongly connected components of the nonpositive-arc digraph: a
// violation exists iff a strictly negative arc joins two nodes of one
// component, and the returned cycle passes through such an arc.
ConsistencyVerdict check_cyclical_consistency(const RMatrix& r, SignTolerance tol = {});

// True iff I is closed under strict direct preference: i in I and
// R_ij < 0 imply j in I. Members are 0-based, duplicates ignored.
bool is_coherent(const RMatrix& r, const std::vector<int>& members, SignTolerance tol = {});

// Smallest coherent superset of seed: forward closure along arcs R_ij < 0.
// Returned members are sorted ascending.
std::vector<int> coherent_closure(const RMatrix& r, const std::vector<int>& seed,
                                  SignTolerance tol = {});

// A permutation sigma with R_{i sigma(i)} < 0 for every i, if one exists.
// Its cycle decomposition is a partition into increasing cycles.
std::optional<Allocation> increasing_cycle_partition(const RMatrix& r, SignTolerance tol = {});

// True iff R_ij != 0 (under classification) for all i != j.
bool check_assumption_a(const RMatrix& r, SignTolerance tol = {});

}  // namespace rphouse
