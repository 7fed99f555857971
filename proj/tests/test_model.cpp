#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "generators.hpp"
#include "rphouse/model.hpp"

using namespace rphouse;

TEST_SUITE_BEGIN("model");

TEST_CASE("classify splits at the tolerance band") {
  const SignTolerance tol{1e-9};
  CHECK(classify(-1.0, tol) == Sign::Negative);
  CHECK(classify(5e-10, tol) == Sign::Zero);
  CHECK(classify(0.1, tol) == Sign::Positive);
  CHECK(classify(-1e-9, tol) == Sign::Zero);  // band is closed
  CHECK(classify(0.0, SignTolerance{0.0}) == Sign::Zero);
  CHECK_THROWS_AS(classify(1.0, SignTolerance{-1.0}), std::invalid_argument);
}

TEST_CASE("classify is monotone") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const SignTolerance tol{1e-3};
  for (int k = 0; k < 2000; ++k) {
    double x = dist(rng), y = dist(rng);
    if (x > y) std::swap(x, y);
    CHECK(static_cast<int>(classify(x, tol)) <= static_cast<int>(classify(y, tol)));
  }
}

TEST_CASE("r_from_demand") {
  SUBCASE("symmetric prices and equal expenditures give the zero matrix") {
    DemandDataset ds({{1, 1}, {1, 1}}, {{1, 0}, {0, 1}});
    RMatrix r = r_from_demand(ds);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) CHECK(r(i, j) == 0.0);
    }
  }
  SUBCASE("crossed prices") {
    DemandDataset ds({{2, 1}, {1, 2}}, {{1, 0}, {0, 1}});
    RMatrix r = r_from_demand(ds);
    CHECK(r(0, 1) == -1.0);
    CHECK(r(1, 0) == -1.0);
    CHECK(r(0, 0) == 0.0);
    CHECK(r(1, 1) == 0.0);
  }
  SUBCASE("single observation") {
    DemandDataset ds({{3, 2}}, {{1, 4}});
    RMatrix r = r_from_demand(ds);
    CHECK(r.size() == 1);
    CHECK(r(0, 0) == 0.0);
  }
  SUBCASE("diagonal is exactly zero on random data") {
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
      DemandDataset ds = generators::random_demand(4, 3, rng);
      RMatrix r = r_from_demand(ds);
      for (int i = 0; i < 4; ++i) CHECK(r(i, i) == 0.0);
    }
  }
}

TEST_CASE("r_from_costs") {
  CHECK(r_from_costs(CostMatrix::from_rows({{5, 4}, {4, 5}}))(0, 1) == -1.0);
  CHECK(r_from_costs(CostMatrix::from_rows({{5, 4}, {4, 5}}))(1, 0) == -1.0);

  RMatrix fixed = r_from_costs(CostMatrix::from_rows({{0, 3}, {3, 0}}));
  CHECK(fixed(0, 1) == 3.0);
  CHECK(fixed(1, 0) == 3.0);

  RMatrix flat = r_from_costs(CostMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(flat(0, 1) == 0.0);
  CHECK(flat(1, 0) == 0.0);
}

TEST_CASE("r_from_costs ignores per-row constants") {
  // Dyadic entries keep the arithmetic exact, so equality is literal.
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> eighth(-16, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4;
    std::vector<double> base(n * n);
    for (double& e : base) e = eighth(rng) / 8.0;
    std::vector<double> shifted = base;
    for (int i = 0; i < n; ++i) {
      const double k = eighth(rng) / 8.0;
      for (int j = 0; j < n; ++j) shifted[i * n + j] += k;
    }
    RMatrix a = r_from_costs(CostMatrix(n, base));
    RMatrix b = r_from_costs(CostMatrix(n, shifted));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) CHECK(a(i, j) == b(i, j));
    }
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(DemandDataset({{1, -1}}, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(DemandDataset({{1, 1}}, {{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(DemandDataset({{1, 1}}, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(DemandDataset({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix::from_rows({{0.5, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix::from_rows({{0, 1, 2}, {1, 0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CostMatrix(2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(CostMatrix::from_rows({{1, std::nan("")}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Allocation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Allocation({1, 2}), std::invalid_argument);
}

TEST_CASE("allocation cycles") {
  Allocation swap({1, 0, 2});
  auto cycles = swap.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<int>{0, 1});
  CHECK(cycles[1] == std::vector<int>{2});
  CHECK(Allocation::identity(3).is_identity());
  CHECK(swap.one_based() == std::vector<int>{2, 1, 3});
}

TEST_SUITE_END();
