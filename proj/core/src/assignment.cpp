#include "rphouse/assignment.hpp"

#include <algorithm>
#include <limits>

#include "kuhn.hpp"

namespace rphouse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

AssignmentResult min_cost_assignment(const CostMatrix& costs) {
  const int n = costs.size();
  std::vector<double> u(n, 0.0);
  std::vector<double> v(n + 1, 0.0);        // index n is the virtual root column
  std::vector<int> row_of_col(n + 1, -1);   // matched row per column

  for (int row = 0; row < n; ++row) {
    row_of_col[n] = row;
    int j0 = n;
    std::vector<double> min_slack(n, kInf);
    std::vector<int> parent(n, n);
    std::vector<char> used(n + 1, 0);
    // Dijkstra over reduced costs; potentials keep u_i + v_j <= K_ij for
    // every already-assigned row, tight along the alternating tree.
    do {
      used[j0] = 1;
      const int i0 = row_of_col[j0];
      double delta = kInf;
      int j1 = -1;
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        const double cur = costs(i0, j) - u[i0] - v[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          parent[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != -1);
    // Augment along the tree back to the root.
    do {
      const int j1 = parent[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != n);
  }

  std::vector<int> sigma(n, -1);
  for (int j = 0; j < n; ++j) sigma[row_of_col[j]] = j;
  double value = 0.0;
  for (int i = 0; i < n; ++i) value += costs(i, sigma[i]);
  v.resize(n);
  return AssignmentResult{Allocation(std::move(sigma)), value, std::move(u), std::move(v)};
}

BottleneckResult bottleneck_assignment(const CostMatrix& costs) {
  const int n = costs.size();
  std::vector<double> values(costs.entries());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  auto matching_at = [&](double threshold) {
    return detail::perfect_matching(n, [&](int i, int j) { return costs(i, j) <= threshold; });
  };

  size_t lo = 0;
  size_t hi = values.size() - 1;  // the full arc set always admits a matching
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    if (matching_at(values[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  auto match = matching_at(values[lo]);
  return BottleneckResult{Allocation(std::move(*match)), values[lo]};
}

bool is_cyclically_monotone(const CostMatrix& m, SignTolerance tol) {
  const int n = m.size();
  std::vector<double> relative(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      relative[static_cast<size_t>(i) * n + j] = m(i, j) - m(i, i);
    }
  }
  const AssignmentResult best = min_cost_assignment(CostMatrix(n, std::move(relative)));
  return best.value >= -tol.tau;
}

}  // namespace rphouse
