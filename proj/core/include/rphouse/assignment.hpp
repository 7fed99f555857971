#pragma once

#include <vector>

#include "rphouse/model.hpp"

namespace rphouse {

// Optimal assignment together with the dual potentials of the matching LP:
// u_i + v_j <= K_ij everywhere, with equality on the matched pairs, and
// sum(u) + sum(v) equal to the optimal value.
struct AssignmentResult {
  Allocation sigma;
  double value = 0.0;
  std::vector<double> row_duals;
  std::vector<double> col_duals;
};

struct BottleneckResult {
  Allocation sigma;
  double value = 0.0;
};

// Minimum-cost perfect assignment by the Hungarian method (shortest
// augmenting paths with explicit potentials), O(n^3). Entries may be
// negative.
AssignmentResult min_cost_assignment(const CostMatrix& costs);

// Minimizes the largest selected entry over all permutations: binary search
// on the sorted distinct entries, feasibility by bipartite matching on arcs
// with entry <= threshold. The returned value is always an entry of the
// matrix.
BottleneckResult bottleneck_assignment(const CostMatrix& costs);

// True iff every cycle has nonnegative total relative cost
// sum_k (M_{i_k i_{k+1}} - M_{i_k i_k}); decided through the assignment
// problem on K_ij = M_ij - M_ii, whose optimal value is >= 0 exactly when
// the identity is optimal.
bool is_cyclically_monotone(const CostMatrix& m, SignTolerance tol = {});

}  // namespace rphouse
