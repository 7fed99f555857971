#include "rphouse/rationalize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rphouse/lp.hpp"

namespace rphouse {

namespace {

// Entries classified Zero are used as exact zeros wherever a sign matters.
double snapped(const RMatrix& r, int i, int j, SignTolerance tol) {
  const double x = r(i, j);
  return classify(x, tol) == Sign::Zero ? 0.0 : x;
}

RMatrix perturbed(const RMatrix& r, const std::vector<double>& b, double e) {
  const int n = r.size();
  std::vector<double> entries(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) entries[static_cast<size_t>(i) * n + j] = r(i, j) + (1.0 - e) * b[i];
    }
  }
  return RMatrix(n, std::move(entries));
}

}  // namespace

CertificateSearch find_certificate(const RMatrix& r, SignTolerance tol) {
  ConsistencyVerdict verdict = check_cyclical_consistency(r, tol);
  if (!verdict.consistent()) {
    return CertificateSearch{std::nullopt, std::move(verdict.violation)};
  }

  // Variables: v_0..v_{n-1} free, lambda_0..lambda_{n-1} >= 1.
  const int n = r.size();
  lp::LinearProgram prog;
  prog.objective.assign(2 * n, 0.0);
  prog.lower_bounds.assign(2 * n, std::nullopt);
  for (int i = 0; i < n; ++i) prog.lower_bounds[n + i] = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<double> row(2 * n, 0.0);
      row[j] += 1.0;
      row[i] -= 1.0;
      row[n + i] = -snapped(r, i, j, tol);
      prog.add_ineq(std::move(row), 0.0);
    }
  }
  auto point = lp::feasible(prog);
  if (!point) {
    // Afriat's theorem rules this out for a consistent matrix.
    throw std::logic_error("find_certificate: LP infeasible on a cyclically consistent matrix");
  }
  Certificate cert;
  cert.v.assign(point->begin(), point->begin() + n);
  cert.lambda.assign(point->begin() + n, point->end());
  return CertificateSearch{std::move(cert), std::nullopt};
}

bool verify_certificate(const RMatrix& r, const Certificate& cert, SignTolerance tol,
                        double feas_tol) {
  const int n = r.size();
  if (cert.v.size() != static_cast<size_t>(n) || cert.lambda.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("verify_certificate: certificate size mismatch");
  }
  for (double l : cert.lambda) {
    if (!std::isfinite(l) || l <= 0.0) return false;
  }
  for (double v : cert.v) {
    if (!std::isfinite(v)) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double diff = cert.v[j] - cert.v[i];
      if (diff > cert.lambda[i] * r(i, j) + feas_tol) return false;
      const Sign s = classify(r(i, j), tol);
      if (s != Sign::Positive && diff > tol.tau) return false;
      if (s == Sign::Negative && !(diff < 0.0)) return false;
    }
  }
  return true;
}

double afriat_utility(const DemandDataset& ds, const Certificate& cert,
                      std::span<const double> x) {
  const int n = ds.n();
  const int L = ds.goods();
  if (cert.v.size() != static_cast<size_t>(n) || cert.lambda.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("afriat_utility: certificate size mismatch");
  }
  if (x.size() != static_cast<size_t>(L)) {
    throw std::invalid_argument("afriat_utility: bundle length mismatch");
  }
  for (double q : x) {
    if (!std::isfinite(q) || q < 0.0) {
      throw std::invalid_argument("afriat_utility: bundle must be nonnegative");
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const auto p = ds.price(i);
    const auto xi = ds.bundle(i);
    double gap = 0.0;
    for (int l = 0; l < L; ++l) gap += p[l] * (x[l] - xi[l]);
    best = std::min(best, cert.v[i] + cert.lambda[i] * gap);
  }
  return best;
}

EfficiencyIndexResult afriat_efficiency_index(const RMatrix& r, const std::vector<double>& b,
                                              SignTolerance tol) {
  const int n = r.size();
  if (b.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("afriat_efficiency_index: b size mismatch");
  }
  for (double bi : b) {
    if (!std::isfinite(bi) || bi <= 0.0) {
      throw std::invalid_argument("afriat_efficiency_index: b must be positive");
    }
  }

  std::vector<double> candidates{0.0, 1.0};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double e = 1.0 + r(i, j) / b[i];
      if (e > 0.0 && e < 1.0) candidates.push_back(e);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto consistent_at = [&](double e) {
    return check_cyclical_consistency(perturbed(r, b, e), tol).consistent();
  };

  if (!consistent_at(candidates.front())) {
    throw std::domain_error("afriat_efficiency_index: inconsistent even at e = 0");
  }
  // Consistency is monotone nonincreasing in e: pick the largest consistent
  // candidate by bisection over the sorted list.
  size_t lo = 0;
  size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const size_t mid = lo + (hi - lo + 1) / 2;
    if (consistent_at(candidates[mid])) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const double e = candidates[lo];

  EfficiencyIndexResult out{e, std::nullopt};
  for (int i = 0; i < n && !out.breakpoint; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && 1.0 + r(i, j) / b[i] == e) {
        out.breakpoint = std::make_pair(i, j);
        break;
      }
    }
  }
  return out;
}

bool rationalizable(const RMatrix& r, SignTolerance tol) {
  return check_cyclical_consistency(r, tol).consistent();
}

}  // namespace rphouse
