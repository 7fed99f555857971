#pragma once

#include <span>
#include <string>
#include <vector>

namespace rphouse {

// Sign of a matrix entry after tolerance classification.
// Ordered: Negative < Zero < Positive.
enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

// Half-width of the band around zero that is treated as "equal to zero",
// in the same units as the entries being classified.
struct SignTolerance {
  double tau = 1e-9;
};

// |x| <= tau -> Zero, x < -tau -> Negative, x > tau -> Positive.
Sign classify(double x, SignTolerance tol = {});

// n observations of prices and chosen bundles over L goods.
// Prices are strictly positive, bundle quantities nonnegative.
class DemandDataset {
 public:
  DemandDataset(std::vector<std::vector<double>> prices,
                std::vector<std::vector<double>> bundles);

  int n() const { return n_; }
  int goods() const { return goods_; }
  std::span<const double> price(int i) const { return prices_[i]; }
  std::span<const double> bundle(int i) const { return bundles_[i]; }

  // Expenditure p_i . x_i of observation i at its own prices.
  double own_expenditure(int i) const;

 private:
  int n_ = 0;
  int goods_ = 0;
  std::vector<std::vector<double>> prices_;
  std::vector<std::vector<double>> bundles_;
};

// Square matrix of finite reals. Entry (i, j) reads either as the budget
// evaluation g_i(x_j) up to the row normalization c_ij - c_ii, or as the
// cost to individual i of house j.
class CostMatrix {
 public:
  CostMatrix(int n, std::vector<double> row_major);
  static CostMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }
  double operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  int n_ = 0;
  std::vector<double> entries_;
};

// The normalized matrix R_ij = c_ij - c_ii (equivalently g_i(x_j)); the
// diagonal is exactly zero, as every result here uses structurally.
class RMatrix {
 public:
  RMatrix(int n, std::vector<double> row_major);
  static RMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }
  double operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  int n_ = 0;
  std::vector<double> entries_;
};

// A permutation of {0,...,n-1}: individual i receives house sigma(i).
class Allocation {
 public:
  explicit Allocation(std::vector<int> sigma);
  static Allocation identity(int n);

  int size() const { return static_cast<int>(sigma_.size()); }
  int operator()(int i) const { return sigma_[i]; }
  const std::vector<int>& mapping() const { return sigma_; }
  bool is_identity() const;

  // Cycle decomposition; each cycle starts at its smallest element, cycles
  // ordered by that element. Fixed points appear as length-1 cycles.
  std::vector<std::vector<int>> cycles() const;

  // 1-based copy for human-facing output.
  std::vector<int> one_based() const;

 private:
  std::vector<int> sigma_;
};

// R_ij = p_i . x_j - p_i . x_i; the diagonal is forced to exact zero.
RMatrix r_from_demand(const DemandDataset& ds);

// R_ij = c_ij - c_ii.
RMatrix r_from_costs(const CostMatrix& c);

// Reinterpret an RMatrix as a plain square matrix (for assignment solvers).
CostMatrix to_cost_matrix(const RMatrix& r);

}  // namespace rphouse
