#include "rphouse/model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rphouse {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_square_finite(int n, const std::vector<double>& entries, const char* what) {
  require(n >= 1, std::string(what) + ": size must be at least 1");
  require(entries.size() == static_cast<size_t>(n) * static_cast<size_t>(n),
          std::string(what) + ": entry count does not match size");
  for (double e : entries) {
    require(std::isfinite(e), std::string(what) + ": entries must be finite");
  }
}

std::vector<double> flatten_rows(const std::vector<std::vector<double>>& rows, const char* what) {
  const size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    require(row.size() == n, std::string(what) + ": matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

Sign classify(double x, SignTolerance tol) {
  require(std::isfinite(tol.tau) && tol.tau >= 0.0, "SignTolerance: tau must be finite and nonnegative");
  require(std::isfinite(x), "classify: value must be finite");
  if (x < -tol.tau) return Sign::Negative;
  if (x > tol.tau) return Sign::Positive;
  return Sign::Zero;
}

DemandDataset::DemandDataset(std::vector<std::vector<double>> prices,
                             std::vector<std::vector<double>> bundles)
    : prices_(std::move(prices)), bundles_(std::move(bundles)) {
  require(!prices_.empty(), "DemandDataset: at least one observation required");
  require(prices_.size() == bundles_.size(), "DemandDataset: price/bundle count mismatch");
  n_ = static_cast<int>(prices_.size());
  goods_ = static_cast<int>(prices_.front().size());
  require(goods_ >= 1, "DemandDataset: at least one good required");
  for (int i = 0; i < n_; ++i) {
    require(prices_[i].size() == static_cast<size_t>(goods_), "DemandDataset: ragged price vector");
    require(bundles_[i].size() == static_cast<size_t>(goods_), "DemandDataset: ragged bundle vector");
    for (double p : prices_[i]) {
      require(std::isfinite(p) && p > 0.0, "DemandDataset: prices must be positive");
    }
    for (double x : bundles_[i]) {
      require(std::isfinite(x) && x >= 0.0, "DemandDataset: quantities must be nonnegative");
    }
  }
}

double DemandDataset::own_expenditure(int i) const {
  return std::inner_product(prices_[i].begin(), prices_[i].end(), bundles_[i].begin(), 0.0);
}

CostMatrix::CostMatrix(int n, std::vector<double> row_major)
    : n_(n), entries_(std::move(row_major)) {
  require_square_finite(n_, entries_, "CostMatrix");
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  return CostMatrix(static_cast<int>(rows.size()), flatten_rows(rows, "CostMatrix"));
}

RMatrix::RMatrix(int n, std::vector<double> row_major)
    : n_(n), entries_(std::move(row_major)) {
  require_square_finite(n_, entries_, "RMatrix");
  for (int i = 0; i < n_; ++i) {
    require(entries_[static_cast<size_t>(i) * n_ + i] == 0.0,
            "RMatrix: diagonal entries must be exactly zero");
  }
}

RMatrix RMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  return RMatrix(static_cast<int>(rows.size()), flatten_rows(rows, "RMatrix"));
}

Allocation::Allocation(std::vector<int> sigma) : sigma_(std::move(sigma)) {
  require(!sigma_.empty(), "Allocation: empty permutation");
  const int n = static_cast<int>(sigma_.size());
  std::vector<char> hit(n, 0);
  for (int v : sigma_) {
    require(v >= 0 && v < n, "Allocation: image out of range");
    require(!hit[v], "Allocation: not a bijection");
    hit[v] = 1;
  }
}

Allocation Allocation::identity(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  return Allocation(std::move(sigma));
}

bool Allocation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (sigma_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Allocation::cycles() const {
  const int n = size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      cyc.push_back(cur);
      cur = sigma_[cur];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Allocation::one_based() const {
  std::vector<int> out(sigma_.size());
  for (size_t i = 0; i < sigma_.size(); ++i) out[i] = sigma_[i] + 1;
  return out;
}

RMatrix r_from_demand(const DemandDataset& ds) {
  const int n = ds.n();
  const int L = ds.goods();
  std::vector<double> entries(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto p = ds.price(i);
    const double own = ds.own_expenditure(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;  // diagonal stays exact zero
      const auto x = ds.bundle(j);
      double cross = 0.0;
      for (int l = 0; l < L; ++l) cross += p[l] * x[l];
      entries[static_cast<size_t>(i) * n + j] = cross - own;
    }
  }
  return RMatrix(n, std::move(entries));
}

RMatrix r_from_costs(const CostMatrix& c) {
  const int n = c.size();
  std::vector<double> entries(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      entries[static_cast<size_t>(i) * n + j] = c(i, j) - c(i, i);
    }
  }
  return RMatrix(n, std::move(entries));
}

CostMatrix to_cost_matrix(const RMatrix& r) {
  return CostMatrix(r.size(), r.entries());
}

}  // namespace rphouse
