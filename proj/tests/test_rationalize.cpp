#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "generators.hpp"
#include "oracles.hpp"
#include "rphouse/rationalize.hpp"

using namespace rphouse;

TEST_SUITE_BEGIN("rationalize");

TEST_CASE("find_certificate on the worked matrices") {
  SUBCASE("all-positive matrix") {
    RMatrix r = RMatrix::from_rows({{0, 1}, {1, 0}});
    CertificateSearch search = find_certificate(r);
    REQUIRE(search.found());
    CHECK(verify_certificate(r, *search.certificate));
  }
  SUBCASE("one-directional preference") {
    RMatrix r = RMatrix::from_rows({{0, -1}, {2, 0}});
    CertificateSearch search = find_certificate(r);
    REQUIRE(search.found());
    CHECK(verify_certificate(r, *search.certificate));
    // The hand certificate from direct substitution also verifies.
    CHECK(verify_certificate(r, Certificate{{0, -1}, {1, 1}}));
  }
  SUBCASE("two-cycle violation") {
    CertificateSearch search = find_certificate(RMatrix::from_rows({{0, -1}, {-1, 0}}));
    REQUIRE_FALSE(search.found());
    CHECK(search.violation->one_based() == std::vector<int>{1, 2});
  }
}

TEST_CASE("verify_certificate checks both (ii) and (iii)") {
  RMatrix positive = RMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(verify_certificate(positive, Certificate{{0, 0}, {1, 1}}));

  RMatrix oneway = RMatrix::from_rows({{0, -1}, {2, 0}});
  CHECK_FALSE(verify_certificate(oneway, Certificate{{0, 0}, {1, 1}}));  // strict branch fails
  CHECK(verify_certificate(oneway, Certificate{{0, -1}, {1, 1}}));

  CHECK_FALSE(verify_certificate(oneway, Certificate{{0, -1}, {0.0, 1}}));  // lambda not positive
  CHECK_THROWS_AS(verify_certificate(oneway, Certificate{{0}, {1}}), std::invalid_argument);
}

TEST_CASE("graph test, certificate LP and verifier agree on random sign matrices") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    RMatrix r = generators::random_r_int(n, rng);
    const bool consistent = check_cyclical_consistency(r).consistent();
    CertificateSearch search = find_certificate(r);
    CHECK(consistent == search.found());
    if (search.found()) {
      CHECK(verify_certificate(r, *search.certificate));
      for (double l : search.certificate->lambda) CHECK(l >= 1.0 - 1e-9);
    } else {
      CHECK(search.violation.has_value());
    }
  }
}

TEST_CASE("certificates are homogeneous of degree one") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    RMatrix r = generators::random_r_int(3 + trial % 3, rng);
    CertificateSearch search = find_certificate(r);
    if (!search.found()) continue;
    for (double t : {0.5, 2.0, 10.0}) {
      Certificate scaled = *search.certificate;
      for (double& v : scaled.v) v *= t;
      for (double& l : scaled.lambda) l *= t;
      CHECK(verify_certificate(r, scaled));
    }
  }
}

TEST_CASE("afriat_utility") {
  SUBCASE("single observation is linear") {
    DemandDataset ds({{2, 3}}, {{1, 1}});
    Certificate cert{{0}, {1}};
    CHECK(afriat_utility(ds, cert, std::vector<double>{1, 1}) == doctest::Approx(0.0));
    CHECK(afriat_utility(ds, cert, std::vector<double>{2, 1}) == doctest::Approx(2.0));
    CHECK(afriat_utility(ds, cert, std::vector<double>{0, 0}) == doctest::Approx(-5.0));
  }
  SUBCASE("interpolates the certificate levels") {
    std::mt19937 rng(71);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 25; ++trial) {
      DemandDataset ds = generators::random_demand(4, 3, rng);
      CertificateSearch search = find_certificate(r_from_demand(ds));
      if (!search.found()) continue;
      ++tested;
      for (int j = 0; j < ds.n(); ++j) {
        const double v = afriat_utility(ds, *search.certificate, ds.bundle(j));
        CHECK(v == doctest::Approx(search.certificate->v[j]).epsilon(1e-9));
      }
    }
    CHECK(tested > 0);
  }
  SUBCASE("affordable bundles never beat the chosen one") {
    std::mt19937 rng(79);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 10; ++trial) {
      DemandDataset ds = generators::cobb_douglas_demand(4, 2, rng);
      CertificateSearch search = find_certificate(r_from_demand(ds));
      if (!search.found()) continue;
      ++tested;
      for (int i = 0; i < ds.n(); ++i) {
        const double budget = ds.own_expenditure(i);
        const double chosen = afriat_utility(ds, *search.certificate, ds.bundle(i));
        for (int draw = 0; draw < 40; ++draw) {
          std::vector<double> y(ds.goods());
          double cost = 0.0;
          for (int l = 0; l < ds.goods(); ++l) {
            y[l] = unit(rng);
            cost += ds.price(i)[l] * y[l];
          }
          const double scale = unit(rng) * budget / cost;
          for (double& q : y) q *= scale;
          CHECK(afriat_utility(ds, *search.certificate, y) <= chosen + 1e-7);
        }
      }
    }
    CHECK(tested > 0);
  }
  SUBCASE("rejects malformed bundles") {
    DemandDataset ds({{1, 1}}, {{1, 1}});
    Certificate cert{{0}, {1}};
    CHECK_THROWS_AS(afriat_utility(ds, cert, std::vector<double>{1}), std::invalid_argument);
    CHECK_THROWS_AS(afriat_utility(ds, cert, std::vector<double>{1, -1}), std::invalid_argument);
  }
}

TEST_CASE("afriat_efficiency_index") {
  SUBCASE("consistent matrices sit at e = 1") {
    EfficiencyIndexResult result =
        afriat_efficiency_index(RMatrix::from_rows({{0, 1}, {1, 0}}), {1, 1});
    CHECK(result.e == 1.0);
    CHECK_FALSE(result.breakpoint.has_value());

    CHECK(afriat_efficiency_index(RMatrix::from_rows({{0, -1}, {2, 0}}), {1, 1}).e == 1.0);
  }
  SUBCASE("worked breakpoint") {
    EfficiencyIndexResult result =
        afriat_efficiency_index(RMatrix::from_rows({{0, -1}, {-1, 0}}), {2, 2});
    CHECK(result.e == 0.5);  // exact breakpoint arithmetic
    REQUIRE(result.breakpoint.has_value());
    CHECK(result.breakpoint->first == 0);
    CHECK(result.breakpoint->second == 1);
  }
  SUBCASE("monotone over the candidate grid") {
    RMatrix r = RMatrix::from_rows({{0, -1, -2}, {1, 0, -1}, {-2, 3, 0}});
    std::vector<double> b{3.0, 2.0, 3.0};  // large enough that e = 0 is consistent
    EfficiencyIndexResult result = afriat_efficiency_index(r, b);
    std::vector<double> candidates{0.0, 1.0};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const double e = 1.0 + r(i, j) / b[i];
        if (e > 0.0 && e < 1.0) candidates.push_back(e);
      }
    }
    for (double e : candidates) {
      std::vector<double> entries(9, 0.0);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i != j) entries[i * 3 + j] = r(i, j) + (1 - e) * b[i];
        }
      }
      const bool consistent = oracles::brute_cyclically_consistent(RMatrix(3, entries));
      CHECK(consistent == (e <= result.e));
    }
  }
  SUBCASE("scale invariance") {
    RMatrix r = RMatrix::from_rows({{0, -1}, {-1, 0}});
    const double base = afriat_efficiency_index(r, {2, 2}).e;
    RMatrix scaled = RMatrix::from_rows({{0, -3}, {-3, 0}});
    CHECK(afriat_efficiency_index(scaled, {6, 6}).e == doctest::Approx(base));
  }
  SUBCASE("input errors") {
    RMatrix r = RMatrix::from_rows({{0, -1}, {-1, 0}});
    CHECK_THROWS_AS(afriat_efficiency_index(r, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(afriat_efficiency_index(r, {1}), std::invalid_argument);
    // b too small to restore consistency anywhere in [0, 1]
    CHECK_THROWS_AS(afriat_efficiency_index(RMatrix::from_rows({{0, -5}, {-5, 0}}), {1, 1}),
                    std::domain_error);
  }
}

TEST_CASE("rationalizable") {
  CHECK(rationalizable(RMatrix::from_rows({{0, 1}, {1, 0}})));
  CHECK_FALSE(rationalizable(RMatrix::from_rows({{0, -1}, {-1, 0}})));
  CHECK_FALSE(rationalizable(RMatrix::from_rows({{0, -1, 2}, {2, 0, -1}, {-1, 2, 0}})));
}

TEST_SUITE_END();
