// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <doctest.h>

#include "ipmlab/linear_program.hpp"
#include "test_helpers.hpp"

using namespace ipmlab;
using ipmlab::testing::vec;

TEST_CASE("construction validates shapes and witness") {
  Matrix A(2, 1);
  A << 1, -1;
  CHECK_THROWS_AS(LinearProgram(A, vec({1}), vec({1})), DimensionError);
  CHECK_THROWS_AS(LinearProgram(A, vec({1, 0}), vec({1, 1})), DimensionError);
  CHECK_THROWS_AS(LinearProgram(A, vec({1, 0}), vec({1}), 0.0, vec({1.0})),
                  NotInteriorError);
  CHECK_NOTHROW(LinearProgram(A, vec({1, 0}), vec({1}), 0.0, vec({0.25})));
}

TEST_CASE("slacks on the unit interval and a small LW box") {
  const LinearProgram box = unit_interval();
  const Vector s = slacks(box, vec({0.5}));
  CHECK(s(0) == doctest::Approx(0.5));
  CHECK(s(1) == doctest::Approx(0.5));
  CHECK_FALSE(is_interior(box, vec({0.0})));
  CHECK(slacks(box, vec({0.0}))(1) == 0.0);
  CHECK_THROWS_AS(slacks(box, vec({0.1, 0.2})), DimensionError);

  const LinearProgram lw = generate_lw({1, 3.0});
  const Vector s_lw = slacks(lw, vec({4.5, 1.5}));
  CHECK(s_lw(0) == doctest::Approx(4.5));
  CHECK(s_lw(1) == doctest::Approx(1.5));
  CHECK(s_lw(2) == doctest::Approx(4.5));
  CHECK(s_lw(3) == doctest::Approx(1.5));
}

TEST_CASE("gap needs a known optimum and is affine with gradient c") {
  CHECK(gap(unit_interval(), vec({0.381966})) == doctest::Approx(0.381966));
  CHECK(gap(generate_lw({3, 10.0}), Vector::Zero(6)) == 0.0);

  Matrix A(2, 1);
  A << 1, -1;
  const LinearProgram unknown(A, vec({1, 0}), vec({1}));
  CHECK_THROWS_AS(gap(unknown, vec({0.5})), MissingDataError);

  const LinearProgram lw = generate_lw({2, 7.0});
  std::mt19937_64 rng(7);
  std::normal_distribution<Real> normal;
  for (int trial = 0; trial < 50; ++trial) {
    Vector x(4), y(4);
    for (int i = 0; i < 4; ++i) {
      x(i) = normal(rng);
      y(i) = normal(rng);
    }
    CHECK(std::abs(gap(lw, x) - gap(lw, y) - lw.c().dot(x - y)) <= 1e-12);
  }
}

TEST_CASE("generate_lw rows, sizes and coefficients") {
  SUBCASE("r = 1 is a box") {
    const LinearProgram lp = generate_lw({1, 3.0});
    REQUIRE(lp.m() == 4);
    REQUIRE(lp.n() == 2);
    Matrix expected(4, 2);
    expected << 1, 0, 0, 1, -1, 0, 0, -1;
    CHECK(lp.A() == expected);
    CHECK(lp.b() == vec({9, 3, 0, 0}));
    CHECK(lp.c() == vec({1, 0}));
    CHECK(lp.optimal_value() == 0.0);
  }
  SUBCASE("r = 2, t = 2") {
    const LinearProgram lp = generate_lw({2, 2.0});
    REQUIRE(lp.m() == 7);
    REQUIRE(lp.n() == 4);
    // Row 5 (index 4): x4 - sqrt(2)(x1 + x2) <= 0.
    CHECK(lp.A()(4, 3) == 1.0);
    CHECK(lp.A()(4, 0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
    CHECK(lp.A()(4, 1) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
    CHECK(lp.b()(4) == 0.0);
    // x3 <= t x1 and x3 <= t x2.
    CHECK(lp.A()(2, 2) == 1.0);
    CHECK(lp.A()(2, 0) == -2.0);
    CHECK(lp.A()(3, 1) == -2.0);
    CHECK(lp.A()(5, 2) == -1.0);
    CHECK(lp.A()(6, 3) == -1.0);
  }
  SUBCASE("r = 3, t = 10 coupling for j = 2") {
    const LinearProgram lp = generate_lw({3, 10.0});
    CHECK(lp.m() == 10);
    CHECK(lp.n() == 6);
    // Third row of the j = 2 block: index 2 + 3 + 2 = 7.
    CHECK(-lp.A()(7, 2) == doctest::Approx(5.6234132519034908).epsilon(1e-14));
    CHECK(lw_coupling_coefficient(10.0, 2) ==
          doctest::Approx(5.6234132519034908).epsilon(1e-14));
  }
  CHECK_THROWS_AS(generate_lw({0, 2.0}), DomainError);
  CHECK_THROWS_AS(generate_lw({2, 1.0}), DomainError);
}

TEST_CASE("lw_interior_point is strictly feasible for every t > 1") {
  {
    const LinearProgram lp = generate_lw({1, 3.0});
    const Vector x = lw_interior_point({1, 3.0});
    CHECK(x == vec({0.5, 0.5}));
    CHECK(slacks(lp, x).isApprox(vec({8.5, 2.5, 0.5, 0.5})));
  }
  {
    const LinearProgram lp = generate_lw({2, 2.0});
    const Vector x = lw_interior_point({2, 2.0});
    CHECK(x == vec({0.5, 0.5, 0.25, 0.25}));
    CHECK(slacks(lp, x)(4) == doctest::Approx(std::sqrt(2.0) - 0.25));
  }
  for (int r = 1; r <= 6; ++r) {
    for (Real t : {1.01, 2.0, 10.0, 1e4}) {
      const LinearProgram lp = generate_lw({r, t});
      CHECK(slacks(lp, lw_interior_point({r, t})).minCoeff() > 0);
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(25, 16) == 2042975);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("min_value_oracle") {
  CHECK(min_value_oracle(unit_interval()) == doctest::Approx(0.0));
  CHECK(min_value_oracle(generate_lw({1, 2.0})) == doctest::Approx(0.0));
  CHECK(min_value_oracle(generate_lw({2, 2.0})) == doctest::Approx(0.0));

  SUBCASE("matches stored optimum across the family") {
    for (int r = 1; r <= 4; ++r) {
      for (Real t : {1.5, 4.0, 100.0}) {
        const LinearProgram lp = generate_lw({r, t});
        CHECK(std::abs(min_value_oracle(lp) - *lp.optimal_value()) <= 1e-9);
      }
    }
  }
  SUBCASE("triangle with a non-zero optimum") {
    // x >= 0, y >= 0, x + y <= 1; min -x - 2y -> -2 at (0, 1).
    Matrix A(3, 2);
    A << -1, 0, 0, -1, 1, 1;
    const LinearProgram lp(A, vec({0, 0, 1}), vec({-1, -2}));
    CHECK(min_value_oracle(lp) == doctest::Approx(-2.0));
  }
  SUBCASE("guard and infeasibility") {
    CHECK_THROWS_AS(min_value_oracle(generate_lw({8, 2.0})), DomainError);
    CHECK_THROWS_AS(min_value_oracle(generate_lw({3, 2.0}), 10), DomainError);
    // x <= -1 and -x <= 0: empty.
    Matrix A(2, 1);
    A << 1, -1;
    CHECK_THROWS_AS(min_value_oracle(LinearProgram(A, vec({-1, 0}), vec({1}))),
                    MissingDataError);
  }
}

TEST_CASE("chebyshev_lp layout and witness") {
  const LinearProgram cheb = chebyshev_lp(unit_square());
  CHECK(cheb.n() == 3);
  CHECK(cheb.m() == 5);
  CHECK(cheb.c() == vec({0, 0, -1}));
  CHECK(cheb.A()(4, 2) == -1.0);
  CHECK(cheb.A()(0, 2) == 1.0);
  REQUIRE(cheb.interior_witness());
  CHECK((*cheb.interior_witness())(2) == doctest::Approx(0.25));
  // Vertex enumeration of the Chebyshev LP: the inradius is 1/2.
  CHECK(-min_value_oracle(cheb) == doctest::Approx(0.5));
  CHECK(-min_value_oracle(chebyshev_lp(unit_interval())) ==
        doctest::Approx(0.5));
}
