#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rphouse/consistency.hpp"
#include "rphouse/model.hpp"

namespace rphouse {

// Afriat certificate: utility levels v_i and multipliers lambda_i with
// v_j - v_i <= lambda_i R_ij for all i, j. Certificates produced here are
// normalized to lambda_i >= 1; verification only requires lambda_i > 0.
struct Certificate {
  std::vector<double> v;
  std::vector<double> lambda;
};

// Either a certificate or the violation cycle explaining its absence.
struct CertificateSearch {
  std::optional<Certificate> certificate;
  std::optional<Cycle> violation;

  bool found() const { return certificate.has_value(); }
};

struct EfficiencyIndexResult {
  double e = 1.0;
  // Entry (i, j) whose perturbed value crosses zero exactly at e, when the
  // binding candidate comes from a crossing.
  std::optional<std::pair<int, int>> breakpoint;
};

// Certificate by LP feasibility over (v, lambda) with lambda_i >= 1; the
// inequality system is homogeneous of degree 1, so this normalization is
// lossless. Entries inside the tolerance band are treated as exact zeros so
// that the search agrees with the graph test on noisy data.
CertificateSearch find_certificate(const RMatrix& r, SignTolerance tol = {});

// Checks the certificate inequalities within feas_tol and the sign
// implications: R_ij <= 0 forces v_j <= v_i + tau, R_ij < 0 forces v_j < v_i.
bool verify_certificate(const RMatrix& r, const Certificate& cert, SignTolerance tol = {},
                        double feas_tol = 1e-7);

// Piecewise-linear Afriat utility for linear budgets:
//   v(x) = min_i { v_i + lambda_i * p_i . (x - x_i) }.
double afriat_utility(const DemandDataset& ds, const Certificate& cert,
                      std::span<const double> x);

// Largest e in [0, 1] such that R^e_ij = R_ij + (1 - e) b_i is cyclically
// consistent (off-diagonal entries only; the diagonal stays zero). The
// candidate set {0, 1} and the zero crossings 1 + R_ij / b_i is exhaustive,
// and consistency is monotone nonincreasing in e, so the search is exact.
// Throws std::domain_error when even e = 0 is inconsistent.
EfficiencyIndexResult afriat_efficiency_index(const RMatrix& r, const std::vector<double>& b,
                                              SignTolerance tol = {});

// Rationalizability is cyclical consistency (both directions of the
// equivalence are exercised by the certificate tests).
bool rationalizable(const RMatrix& r, SignTolerance tol = {});

}  // namespace rphouse
