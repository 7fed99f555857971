#pragma once

#include <optional>
#include <vector>

#include "rphouse/model.hpp"
#include "rphouse/rationalize.hpp"

namespace rphouse {

// Welfare weights on the simplex: nonnegative, summing to one.
class SimplexWeights {
 public:
  explicit SimplexWeights(std::vector<double> lambda);
  static SimplexWeights uniform(int n);

  int size() const { return static_cast<int>(lambda_.size()); }
  double operator[](int i) const { return lambda_[i]; }
  const std::vector<double>& values() const { return lambda_; }

 private:
  std::vector<double> lambda_;
};

struct WeightedIndex {
  double value = 0.0;
  SimplexWeights weights;
};

struct BottleneckIndex {
  double value = 0.0;
  Allocation sigma;
};

// Index G with both the maximizing weights and a single-cycle permutation
// attaining the inner minimum at those weights (identity when G = 0).
struct CycleIndex {
  double value = 0.0;
  SimplexWeights weights;
  Allocation sigma;
};

struct IndexReport {
  double a_star = 0.0;
  double a = 0.0;
  double b = 0.0;
  double g = 0.0;
  double epsilon = 0.0;
  SimplexWeights lambda_a_star;
  SimplexWeights lambda_a;
  Allocation sigma_b;
  SimplexWeights lambda_g;
  Allocation sigma_g;
};

// A = max over the simplex of the minimum weighted assignment value for
// K_ij = lambda_i R_ij. Computed as one compact LP: maximize sum(u) + sum(w)
// over (lambda, u, w) subject to u_i + w_j <= lambda_i R_ij, using LP duality
// of the inner assignment problem.
WeightedIndex index_a(const RMatrix& r);

// Same program with the additional bounds lambda_i >= eps; requires
// 0 < eps <= 1/n. Zero exactly when the data are rationalizable (for a
// valid eps).
WeightedIndex index_a_star(const RMatrix& r, double eps);

// min_i lambda_i / sum_k lambda_k: a valid eps witnessing the certificate's
// weights after normalization.
double epsilon_from_certificate(const Certificate& cert);

// B = min over permutations of the largest selected entry; delegates to the
// bottleneck assignment. Always <= 0 since the identity selects the diagonal.
BottleneckIndex index_b(const RMatrix& r);

// G restricts the inner minimum to permutations with a single nontrivial
// cycle (the identity included, so G <= 0 on every input). Cutting-plane
// outer loop over generated cycle constraints; the separation oracle runs a
// dynamic program over walk lengths and falls back to an exact subset DP
// when composite walks hide the minimum simple cycle.
CycleIndex index_g(const RMatrix& r);

// W(lambda) = min over the assignment polytope of the weighted coordinate
// sum, evaluated through the assignment problem on K_ij = lambda_i c_ij.
double support_function(const CostMatrix& c, const SimplexWeights& weights);

// True iff the diagonal (c_11, ..., c_nn) is an extreme point of the
// assignment polytope with a componentwise positive normal vector:
// index_a_star(r_from_costs(c), eps) = 0.
bool extreme_point_test(const CostMatrix& c, double eps);

// All four indices plus the eps used for A*. When eps is not supplied it is
// taken from the certificate when one exists, otherwise from a conservative
// bound on the entries. Verifies A* <= A <= B <= 0 and A <= G <= 0.
IndexReport full_report(const RMatrix& r, std::optional<double> eps = std::nullopt,
                        SignTolerance tol = {});

}  // namespace rphouse
