// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <Eigen/LU>
#include <doctest.h>

#include "ipmlab/barrier.hpp"
#include "test_helpers.hpp"

using namespace ipmlab;
using ipmlab::testing::random_direction;
using ipmlab::testing::random_interior;
using ipmlab::testing::vec;

TEST_CASE("barrier handles") {
  const Barrier log7 = Barrier::logarithmic(7);
  CHECK(log7.nu() == 7.0);
  CHECK(log7.name() == "log");
  CHECK(log7.kind() == BarrierKind::kLog);

  const Barrier alt = Barrier::alternating(7);
  CHECK(alt.nu() == 11.0);
  CHECK(alt.weights() == vec({2, 1, 2, 1, 2, 1, 2}));
  CHECK(alt.name() == "weighted-log");

  CHECK_THROWS_AS(Barrier::weighted(vec({1.0, 0.5})), DomainError);
  CHECK_THROWS_AS(Barrier::logarithmic(0), DomainError);

  const LinearProgram box = unit_interval();
  CHECK_THROWS_AS(eval_barrier(box, Barrier::logarithmic(3), vec({0.5})),
                  DimensionError);
  CHECK_THROWS_AS(eval_barrier(box, Barrier::logarithmic(2), vec({1.0})),
                  NotInteriorError);
  CHECK_THROWS_AS(eval_barrier(box, Barrier::logarithmic(2), vec({-0.1})),
                  NotInteriorError);
}

TEST_CASE("unit interval derivatives at 0.9") {
  const LinearProgram box = unit_interval();
  const BarrierEval e = eval_barrier(box, Barrier::logarithmic(2), vec({0.9}));
  CHECK(e.value == doctest::Approx(-std::log(0.1) - std::log(0.9)));
  CHECK(e.gradient(0) == doctest::Approx(8.88888888888889).epsilon(1e-13));
  CHECK(e.hessian(0, 0) ==
        doctest::Approx(1.0 / 0.01 + 1.0 / 0.81).epsilon(1e-13));
}

TEST_CASE("denominators use the slack at x") {
  // phi = -ln(9 - x1) - ln(3 - x2) - ln x1 - ln x2 at (4.5, 1.5).
  const LinearProgram lp = generate_lw({1, 3.0});
  const BarrierEval e =
      eval_barrier(lp, Barrier::logarithmic(4), vec({4.5, 1.5}));
  CHECK(e.gradient.norm() <= 1e-14);
  CHECK(e.hessian(0, 0) == doctest::Approx(2.0 / 20.25));
  CHECK(e.hessian(1, 1) == doctest::Approx(2.0 / 2.25));
  CHECK(e.hessian(0, 1) == 0.0);
}

TEST_CASE("gradient and Hessian agree with finite differences") {
  std::mt19937_64 rng(11);
  for (const auto& lp : {generate_lw({2, 5.0}), generate_lw({3, 10.0}),
                         ipmlab::testing::random_bounded_lp(3, 6, 4)}) {
    for (const Barrier& bar :
         {Barrier::logarithmic(lp.m()), Barrier::alternating(lp.m())}) {
      const Vector x0 = *lp.interior_witness();
      for (int trial = 0; trial < 5; ++trial) {
        const Vector x = random_interior(lp, bar, x0, rng, 0.5);
        const BarrierEval e = eval_barrier(lp, bar, x);
        const Real step = 1e-6 * (1 + x.norm());
        for (int k = 0; k < lp.n(); ++k) {
          Vector dx = Vector::Zero(lp.n());
          dx(k) = step;
          const Real fd_grad = (eval_barrier(lp, bar, x + dx).value -
                                eval_barrier(lp, bar, x - dx).value) /
                               (2 * step);
          const Vector fd_hess = (eval_barrier(lp, bar, x + dx).gradient -
                                  eval_barrier(lp, bar, x - dx).gradient) /
                                 (2 * step);
          const Real scale = 1 + e.gradient.cwiseAbs().maxCoeff();
          CHECK(std::abs(fd_grad - e.gradient(k)) <= 1e-6 * scale);
          const Real hscale = 1 + e.hessian.cwiseAbs().maxCoeff();
          CHECK((fd_hess - e.hessian.col(k)).cwiseAbs().maxCoeff() <=
                1e-6 * hscale);
        }
        const BarrierEval d = eval_barrier_derivatives(lp, bar, x);
        CHECK(d.gradient == e.gradient);
        CHECK(d.hessian == e.hessian);
      }
    }
  }
}

TEST_CASE("HessianFactor norms") {
  Matrix H(2, 2);
  H << 4, 1, 1, 3;
  const HessianFactor f(H);
  const Vector h = vec({1, -2});
  CHECK(f.local_norm(h) == doctest::Approx(std::sqrt(h.dot(H * h))));
  CHECK(f.dual_norm(h) ==
        doctest::Approx(std::sqrt(h.dot(H.inverse() * h))));
  CHECK(f.dual_inner(h, vec({0, 1})) ==
        doctest::Approx(h.dot(H.inverse() * vec({0, 1}))));
  CHECK(local_norm(H, h) == doctest::Approx(f.local_norm(h)));
  CHECK(dual_norm(H, h) == doctest::Approx(f.dual_norm(h)));
  CHECK(f.condition_estimate() >= 1.0);

  Matrix singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK_THROWS_AS((HessianFactor(singular)), FactorizationError);
  Matrix indefinite(2, 2);
  indefinite << 1, 0, 0, -1;
  CHECK_THROWS_AS((HessianFactor(indefinite)), FactorizationError);
}

TEST_CASE("Dikin ellipsoid stays inside the feasible region") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<Real> unit(0.0, 1.0);
  for (const auto& lp : {generate_lw({2, 10.0}), generate_lw({3, 4.0}),
                         ipmlab::testing::random_bounded_lp(4, 8, 9)}) {
    const Barrier bar = Barrier::logarithmic(lp.m());
    const Vector x0 = *lp.interior_witness();
    int outside = 0;
    for (int point = 0; point < 50; ++point) {
      const Vector x = random_interior(lp, bar, x0, rng, 0.9);
      const Ellipsoid e = dikin_ellipsoid(lp, bar, x);
      for (int dir = 0; dir < 200; ++dir) {
        const Vector h = random_direction(lp.n(), rng);
        const Vector p =
            x + unit(rng) * (ellipsoid_boundary_point(e, h) - x);
        if (slacks(lp, p).minCoeff() < 0) ++outside;
      }
    }
    CHECK(outside == 0);
  }
}

TEST_CASE("linear optimization over an ellipsoid") {
  Matrix Q(2, 2);
  Q << 2, 0.5, 0.5, 1;
  const Ellipsoid e{Q, vec({1, -1})};
  const Vector a = vec({3, 1});
  const EllipsoidLinopt opt = ellipsoid_linopt(e, a);
  const Real radius = std::sqrt(a.dot(Q.inverse() * a));
  CHECK(opt.max == doctest::Approx(a.dot(e.center) + radius));
  CHECK(opt.min == doctest::Approx(a.dot(e.center) - radius));
  CHECK(a.dot(opt.argmax) == doctest::Approx(opt.max));
  CHECK(a.dot(opt.argmin) == doctest::Approx(opt.min));
  CHECK((opt.argmax - e.center).dot(Q * (opt.argmax - e.center)) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(ellipsoid_linopt(e, Vector::Zero(2)), DomainError);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<Real> unit(0.0, 1.0);
  Real best = -1e300;
  Real worst = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const Vector p = e.center + std::sqrt(unit(rng)) *
                                    (ellipsoid_boundary_point(
                                         e, random_direction(2, rng)) -
                                     e.center);
    const Real v = a.dot(p);
    CHECK(v <= opt.max + 1e-12);
    CHECK(v >= opt.min - 1e-12);
    best = std::max(best, v);
    worst = std::min(worst, v);
  }
  // Sampled extremes approach the closed form.
  CHECK(best > opt.max - 0.1 * radius);
  CHECK(worst < opt.min + 0.1 * radius);
}

TEST_CASE("C_nu") {
  CHECK(c_nu(7.0) == doctest::Approx(12.2915026221292).epsilon(1e-14));
  CHECK(c_nu(0.0) == 0.0);
  CHECK(c_nu(4.0) == 8.0);
  CHECK_THROWS_AS(c_nu(-1.0), DomainError);
}

TEST_CASE("self-concordance on the unit interval") {
  const LinearProgram box = unit_interval();
  const Barrier bar = Barrier::logarithmic(2);
  const ScCheck sc = check_sc_inequality(box, bar, vec({0.9}), vec({1.0}));
  CHECK(sc.third_derivative ==
        doctest::Approx(1997.25651577503).epsilon(1e-6));
  CHECK(sc.lhs == doctest::Approx(1997.25651577503).epsilon(1e-6));
  CHECK(sc.rhs == doctest::Approx(2 * std::pow(101.234567901235, 1.5)));
  CHECK(sc.satisfied);
  // Mirror point flips the sign.
  const ScCheck mirror =
      check_sc_inequality(box, bar, vec({0.1}), vec({1.0}));
  CHECK(mirror.third_derivative ==
        doctest::Approx(-1997.25651577503).epsilon(1e-6));

  const InequalityCheck nu = check_nu_sc(box, bar, vec({0.9}), vec({1.0}));
  CHECK(nu.lhs == doctest::Approx(8.88888888888889));
  CHECK(nu.rhs == doctest::Approx(std::sqrt(2 * 101.234567901235)));
  CHECK(nu.satisfied);

  CHECK_THROWS_AS(check_sc_inequality(box, bar, vec({1e-7}), vec({1.0}), 0.1),
                  NotInteriorError);
}

TEST_CASE("self-concordance inequalities hold on random points") {
  std::mt19937_64 rng(77);
  for (const auto& lp :
       {generate_lw({2, 3.0}), ipmlab::testing::random_bounded_lp(3, 5, 21)}) {
    for (const Barrier& bar :
         {Barrier::logarithmic(lp.m()), Barrier::alternating(lp.m())}) {
      const Vector x0 = *lp.interior_witness();
      for (int trial = 0; trial < 100; ++trial) {
        const Vector x = random_interior(lp, bar, x0, rng, 0.8);
        const Vector h = random_direction(lp.n(), rng);
        CHECK(check_sc_inequality(lp, bar, x, h).satisfied);
        CHECK(check_nu_sc(lp, bar, x, h).satisfied);
      }
    }
  }
}
