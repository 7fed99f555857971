#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace rphouse::detail {

// Perfect matching on a bipartite graph with n nodes per side, by augmenting
// paths. Rows are processed in ascending order and columns scanned ascending,
// so the result is deterministic. Returns row -> column, or nothing if no
// perfect matching exists.
inline std::optional<std::vector<int>> perfect_matching(
    int n, const std::function<bool(int, int)>& arc) {
  std::vector<int> row_of_col(n, -1);
  std::vector<char> visited(n, 0);

  std::function<bool(int)> augment = [&](int row) -> bool {
    for (int col = 0; col < n; ++col) {
      if (visited[col] || !arc(row, col)) continue;
      visited[col] = 1;
      if (row_of_col[col] < 0 || augment(row_of_col[col])) {
        row_of_col[col] = row;
        return true;
      }
    }
    return false;
  };

  for (int row = 0; row < n; ++row) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(row)) return std::nullopt;
  }
  std::vector<int> sigma(n, -1);
  for (int col = 0; col < n; ++col) sigma[row_of_col[col]] = col;
  return sigma;
}

}  // namespace rphouse::detail
