#include "rphouse/consistency.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "kuhn.hpp"

namespace rphouse {

namespace {

// Kosaraju, iterative. Returns component id per node.
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, int>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < static_cast<int>(adj[v].size())) {
        const int w = adj[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<int>> radj(n);
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) radj[w].push_back(v);
  }
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int k = n - 1; k >= 0; --k) {
    const int s = order[k];
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : radj[v]) {
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  return comp;
}

// Shortest path from `from` to `to` along the given arcs, restricted to one
// component. Both endpoints included in the returned path.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, const std::vector<int>& comp,
                          int from, int to) {
  std::vector<int> prev(adj.size(), -1);
  std::deque<int> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : adj[v]) {
      if (comp[w] != comp[from] || prev[w] >= 0) continue;
      prev[w] = v;
      queue.push_back(w);
    }
  }
  if (prev[to] < 0) throw std::logic_error("consistency: no path inside component");
  std::vector<int> path;
  for (int v = to; v != from; v = prev[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<char> member_mask(int n, const std::vector<int>& members) {
  std::vector<char> mask(n, 0);
  for (int i : members) {
    if (i < 0 || i >= n) throw std::invalid_argument("subset index out of range");
    mask[i] = 1;
  }
  return mask;
}

}  // namespace

std::vector<int> Cycle::one_based() const {
  std::vector<int> out(nodes.size());
  for (size_t k = 0; k < nodes.size(); ++k) out[k] = nodes[k] + 1;
  return out;
}

ConsistencyVerdict check_cyclical_consistency(const RMatrix& r, SignTolerance tol) {
  const int n = r.size();
  std::vector<std::vector<int>> nonpos(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && classify(r(i, j), tol) != Sign::Positive) nonpos[i].push_back(j);
    }
  }
  const std::vector<int> comp = strongly_connected_components(nonpos);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || comp[i] != comp[j]) continue;
      if (classify(r(i, j), tol) != Sign::Negative) continue;
      // Close the strict arc i -> j with a nonpositive path j -> i.
      std::vector<int> path = bfs_path(nonpos, comp, j, i);
      std::vector<int> nodes{i};
      nodes.insert(nodes.end(), path.begin(), path.end() - 1);
      return ConsistencyVerdict{Cycle{std::move(nodes)}};
    }
  }
  return ConsistencyVerdict{};
}

bool is_coherent(const RMatrix& r, const std::vector<int>& members, SignTolerance tol) {
  const int n = r.size();
  const std::vector<char> mask = member_mask(n, members);
  for (int i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!mask[j] && classify(r(i, j), tol) == Sign::Negative) return false;
    }
  }
  return true;
}

std::vector<int> coherent_closure(const RMatrix& r, const std::vector<int>& seed,
                                  SignTolerance tol) {
  const int n = r.size();
  std::vector<char> mask = member_mask(n, seed);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (mask[i]) stack.push_back(i);
  }
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (!mask[j] && classify(r(i, j), tol) == Sign::Negative) {
        mask[j] = 1;
        stack.push_back(j);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

std::optional<Allocation> increasing_cycle_partition(const RMatrix& r, SignTolerance tol) {
  const int n = r.size();
  auto match = detail::perfect_matching(
      n, [&](int i, int j) { return classify(r(i, j), tol) == Sign::Negative; });
  if (!match) return std::nullopt;
  return Allocation(std::move(*match));
}

bool check_assumption_a(const RMatrix& r, SignTolerance tol) {
  const int n = r.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && classify(r(i, j), tol) == Sign::Zero) return false;
    }
  }
  return true;
}

}  // namespace rphouse
