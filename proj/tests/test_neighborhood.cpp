// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <doctest.h>

#include "ipmlab/neighborhood.hpp"
#include "test_helpers.hpp"

using namespace ipmlab;
using ipmlab::testing::vec;

namespace {

bool all_satisfied(const std::vector<BoundCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.satisfied) return false;
  }
  return !checks.empty();
}

}  // namespace

TEST_CASE("beta") {
  CHECK(beta(0.1) == doctest::Approx(0.109178006414060).epsilon(1e-13));
  CHECK(beta(0.2) == doctest::Approx(0.240893734117895).epsilon(1e-13));
  CHECK(beta(0.5) == doctest::Approx(0.893149823923446).epsilon(1e-13));
  CHECK(max_valid_theta() == doctest::Approx((std::sqrt(69.0) - 3) / 10));
  CHECK(beta(max_valid_theta()) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(beta(0.0), DomainError);
  Real prev = 0;
  for (Real theta = 0.01; theta < 0.53; theta += 0.01) {
    CHECK(beta(theta) > prev);
    prev = beta(theta);
  }
  CHECK_THROWS_AS(beta(1.0), DomainError);
  CHECK_THROWS_AS(beta(-0.1), DomainError);
}

TEST_CASE("make_check tolerance") {
  CHECK(make_check("a", 1.0, 1.0, "x").satisfied);
  CHECK(make_check("a", 1.0 + 5e-9, 1.0, "x").satisfied);
  CHECK_FALSE(make_check("a", 1.0 + 1e-7, 1.0, "x").satisfied);
  CHECK(make_check("a", 5e-11, 0.0, "x").satisfied);
  CHECK_FALSE(make_check("a", 1e-9, 0.0, "x").satisfied);
  const BoundCheck c = make_check("lbl", 1.0, 3.0, "anchor");
  CHECK(c.margin == doctest::Approx(2.0));
  CHECK(c.label == "lbl");
  CHECK(c.anchor == "anchor");
}

TEST_CASE("l2 membership on the unit interval") {
  const LinearProgram box = unit_interval();
  const Barrier bar = Barrier::logarithmic(2);
  const L2Membership set = l2_membership(box, bar, vec({0.5}), 0.3);
  CHECK(set.member);
  CHECK(set.unbounded());
  CHECK(set.lo == doctest::Approx(1.17851130197758).epsilon(1e-13));
  CHECK(set.contains(2.0));
  CHECK_FALSE(set.contains(1.0));
  const Real mu = representative_mu(box, bar, vec({0.5}), set);
  CHECK(newton_decrement(box, bar, vec({0.5}), Mu::finite(mu)) <= 0.3);

  // Near the boundary the point is on no neighborhood of width 0.3.
  CHECK_FALSE(l2_membership(box, bar, vec({0.999}), 0.3).member);
}

TEST_CASE("l2 membership agrees with direct decrement probes") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<Real> log_mu(-4.0, 4.0);
  int probes = 0;
  for (const auto& lp :
       {generate_lw({2, 10.0}), ipmlab::testing::random_bounded_lp(3, 6, 12)}) {
    for (const Barrier& bar :
         {Barrier::logarithmic(lp.m()), Barrier::alternating(lp.m())}) {
      for (int i = 0; i < 25; ++i) {
        const Real mu_c = std::pow(10.0, log_mu(rng));
        const Vector x = sample_l2_point(lp, bar, mu_c, 0.4, 1000 + i);
        const L2Membership set = l2_membership(lp, bar, x, 0.3);
        const Real lambda_c = newton_decrement(lp, bar, x, Mu::finite(mu_c));
        if (lambda_c <= 0.3 - 1e-9) CHECK(set.contains(mu_c));
        if (lambda_c > 0.3 + 1e-9) CHECK_FALSE(set.contains(mu_c));
        for (int j = 0; j < 4; ++j) {
          const Real mu = mu_c * std::pow(10.0, log_mu(rng) / 4);
          const Real lambda = newton_decrement(lp, bar, x, Mu::finite(mu));
          if (lambda <= 0.3 - 1e-9) CHECK(set.contains(mu));
          if (lambda > 0.3 + 1e-9) CHECK_FALSE(set.contains(mu));
        }
        if (set.member) {
          const Real rep = representative_mu(lp, bar, x, set);
          CHECK(set.contains(rep));
          CHECK(newton_decrement(lp, bar, x, Mu::finite(rep)) <=
                0.3 * (1 + 1e-8));
          if (!set.unbounded()) {
            CHECK(newton_decrement(lp, bar, x, Mu::finite(set.lo)) ==
                  doctest::Approx(0.3).epsilon(1e-6));
            CHECK(newton_decrement(lp, bar, x, Mu::finite(set.hi)) ==
                  doctest::Approx(0.3).epsilon(1e-6));
          }
        }
        ++probes;
      }
    }
  }
  CHECK(probes == 100);
}

TEST_CASE("eta matching on the log path") {
  const LinearProgram lp = generate_lw({2, 10.0});
  PathSearcher searcher(lp, Barrier::logarithmic(lp.m()));
  CHECK(gap(lp, searcher.analytic_center()) ==
        doctest::Approx(searcher.objective_sup()));
  for (Real target : {1e-4, 0.1, 3.0, 0.9 * searcher.objective_sup()}) {
    const EtaMatch m = match_eta(lp, searcher, target);
    CHECK(std::abs(m.achieved_gap - target) <= 1e-10 * target);
    CHECK(gap(lp, m.log_center) == doctest::Approx(m.achieved_gap));
    CHECK(newton_decrement(lp, Barrier::logarithmic(lp.m()), m.log_center,
                           Mu::finite(m.eta)) <= 1e-10);
    CHECK(m.evaluations > 0);
  }
  const EtaMatch small = match_eta(lp, 1e-3);
  CHECK(small.hypothesis == Lemma3Hypothesis::kUnknown);
  const EtaMatch with_rho = match_eta(lp, 1e-3, 1e-10, inradius(lp));
  CHECK(with_rho.hypothesis == Lemma3Hypothesis::kMet);
  const EtaMatch near_sup =
      match_eta(lp, 0.99 * searcher.objective_sup(), 1e-10, inradius(lp));
  CHECK(near_sup.hypothesis == Lemma3Hypothesis::kUnmet);

  CHECK_THROWS_AS(match_eta(lp, searcher, 2 * searcher.objective_sup()),
                  DomainError);
  CHECK_THROWS_AS(match_eta(lp, searcher, -1.0), DomainError);
  CHECK(to_string(Lemma3Hypothesis::kMet) == "met");
}

TEST_CASE("gap threshold of the eta sandwich") {
  const LinearProgram lw1 = generate_lw({1, 10.0});
  const auto thr = lemma3_gap_threshold(lw1, std::nullopt);
  REQUIRE(thr);
  CHECK(*thr == doctest::Approx(5.0 / (8 + 8)));
  CHECK_FALSE(lemma3_gap_threshold(generate_lw({2, 10.0}), std::nullopt));
  CHECK_FALSE(lemma3_gap_threshold(unit_interval(), std::nullopt));
  const auto box = lemma3_gap_threshold(unit_interval(), 0.5);
  REQUIRE(box);
  CHECK(*box == doctest::Approx(0.0517766952966369).epsilon(1e-13));
}

TEST_CASE("wide certificate at log-path points") {
  for (const auto& lp :
       {generate_lw({2, 10.0}), generate_lw({3, 4.0})}) {
    PathSearcher searcher(lp, Barrier::logarithmic(lp.m()));
    for (Real eta : {1e-3, 0.1, 1.0, 30.0}) {
      const Vector x = searcher.center_at(eta);
      const WideCertificate cert = wide_certificate(lp, x);
      CHECK(cert.theta_effective <= 1e-8);
      CHECK(cert.dual_residual <= 1e-8);
      CHECK(cert.eta == doctest::Approx(eta).epsilon(1e-6));
      CHECK(cert.mu == doctest::Approx(eta).epsilon(1e-6));
      CHECK(cert.y.minCoeff() > 0);
      CHECK(in_wide_neighborhood(lp, x, cert, 1e-6, 1e-8));
    }
  }
}

TEST_CASE("wide certificate from a known center") {
  const LinearProgram box = unit_interval();
  const Vector xc = vec({0.381966011250105});
  const WideCertificate cert =
      certificate_from_log_center(box, vec({0.3}), 1.0, xc);
  CHECK(cert.y(0) == doctest::Approx(1.0 / (1 - xc(0))));
  CHECK(cert.y(1) == doctest::Approx(1.0 / xc(0)));
  CHECK(cert.dual_residual <= 1e-13);
  const Real p0 = cert.y(0) * 0.7;
  const Real p1 = cert.y(1) * 0.3;
  CHECK(cert.mu == doctest::Approx((p0 + p1) / 2));
  CHECK(cert.min_product == doctest::Approx(std::min(p0, p1)));
  CHECK(cert.theta_effective ==
        doctest::Approx(1 - 2 * std::min(p0, p1) / (p0 + p1)));
  CHECK(in_wide_neighborhood(box, vec({0.3}), cert, cert.theta_effective + 1e-9,
                             1e-10));
  CHECK_FALSE(in_wide_neighborhood(box, vec({0.3}), cert,
                                   cert.theta_effective - 1e-3, 1e-10));
}

TEST_CASE("central path equivalence") {
  for (const auto& lp :
       {generate_lw({2, 10.0}), ipmlab::testing::random_bounded_lp(3, 5, 8)}) {
    const LinearProgram with_opt =
        lp.optimal_value() ? lp : lp.with_optimal_value(min_value_oracle(lp));
    const Barrier log = Barrier::logarithmic(with_opt.m());
    const Barrier alt = Barrier::alternating(with_opt.m());
    for (Real mu : {1e-3, 0.01, 0.1, 1.0}) {
      const auto checks = verify_thm_equivalence(with_opt, alt, log, mu);
      CHECK(checks.size() == static_cast<std::size_t>(2 * with_opt.m()));
      CHECK(all_satisfied(checks));
      CHECK(checks.front().anchor == "thm1");
      CHECK(all_satisfied(verify_thm_equivalence(with_opt, log, alt, mu)));
    }
  }
  // Here the weighted center at large mu has a larger objective than the
  // log-barrier analytic center, so no matching eta exists.
  const LinearProgram lp = ipmlab::testing::random_bounded_lp(3, 5, 8);
  const LinearProgram with_opt = lp.with_optimal_value(min_value_oracle(lp));
  CHECK_THROWS_AS(verify_thm_equivalence(with_opt,
                                         Barrier::alternating(with_opt.m()),
                                         Barrier::logarithmic(with_opt.m()),
                                         10.0),
                  PreconditionError);
}

TEST_CASE("gap sandwich on the central path") {
  const LinearProgram box = unit_interval();
  for (Real mu : {1e-3, 0.1, 1.0, 100.0}) {
    const auto checks = verify_thm_gap(box, Barrier::logarithmic(2), mu, 0.5);
    REQUIRE(checks.size() == 2);
    CHECK(all_satisfied(checks));
  }
  const auto far = verify_thm_gap(box, Barrier::logarithmic(2), 100.0, 0.5);
  CHECK(far[0].lhs == doctest::Approx(0.0517766952966369).epsilon(1e-12));

  const LinearProgram lw = generate_lw({3, 10.0});
  const Real rho = inradius(lw);
  for (const Barrier& bar :
       {Barrier::logarithmic(lw.m()), Barrier::alternating(lw.m())}) {
    for (Real mu : {1e-4, 1e-2, 1.0, 1e2, 1e4}) {
      CHECK(all_satisfied(verify_thm_gap(lw, bar, mu, rho)));
    }
  }
}

TEST_CASE("slack and gap ratios in the l2 neighborhood") {
  const LinearProgram lw = generate_lw({2, 10.0});
  for (const Barrier& bar :
       {Barrier::logarithmic(lw.m()), Barrier::alternating(lw.m())}) {
    for (Real theta : {0.1, 0.2, 0.5}) {
      for (Real mu : {1e-2, 1.0, 1e2}) {
        const Vector xc = center(lw, bar, Mu::finite(mu), *lw.interior_witness())
                              .x;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          const Vector x = sample_l2_point(lw, bar, mu, theta, seed, xc);
          CHECK(newton_decrement(lw, bar, x, Mu::finite(mu)) <= theta);
          const auto slack = verify_prop_slack(lw, bar, mu, x, theta);
          CHECK(slack.size() == static_cast<std::size_t>(2 * lw.m()));
          CHECK(all_satisfied(slack));
          const auto g = verify_prop_gap(lw, bar, mu, x, theta);
          CHECK(g.size() == 2);
          CHECK(all_satisfied(g));
        }
      }
    }
  }
  const Barrier bar = Barrier::logarithmic(lw.m());
  const Vector x = sample_l2_point(lw, bar, 1.0, 0.2, 7);
  CHECK(x == sample_l2_point(lw, bar, 1.0, 0.2, 7));
  CHECK_THROWS_AS(verify_prop_slack(lw, bar, 1.0, x, 0.6), PreconditionError);
  CHECK_THROWS_AS(verify_prop_gap(lw, bar, 1e-6, x, 0.2), PreconditionError);
}

TEST_CASE("certificate-chain constants") {
  CHECK(corollary_omega(0.2, 7, 2) ==
        doctest::Approx(0.996537260491949).epsilon(1e-13));
  CHECK(corollary_omega_m(0.2, 7, 7) == corollary_omega(0.2, 7, 2));

  // Increasing in theta and in nu.
  for (int r = 1; r <= 5; ++r) {
    Real prev = 0;
    for (Real theta = 0.05; theta < 0.5; theta += 0.05) {
      const Real w = corollary_omega(theta, 3 * r + 1, r);
      CHECK(w > prev);
      CHECK(w < 1);
      CHECK(corollary_omega(theta, 3 * r + 2, r) > w);
      prev = w;
    }
  }

  const CorollaryThresholds th = corollary_thresholds(0.2, 7, 2, 100);
  CHECK(th.gap0_min == doctest::Approx(1520.91217573499).epsilon(1e-12));
  CHECK(th.simplified_gap0 == doctest::Approx(44800));
  CHECK(th.simplified_gapK == doctest::Approx(1.0 / 360));
  CHECK(th.gap0_dominated);
  CHECK(th.gapK_dominated);

  for (int r = 1; r <= 6; ++r) {
    for (Real theta : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45}) {
      const int m = 3 * r + 1;
      for (Real nu : {Real(m), Real(m + (m + 1) / 2)}) {
        for (Real t : {2.0, 10.0, 1e4}) {
          const CorollaryThresholds g = corollary_thresholds(theta, nu, r, t);
          CHECK(g.gap0_dominated);
          CHECK(g.gapK_dominated);
        }
      }
    }
  }
  CHECK_FALSE(corollary_thresholds(0.49, 4, 1, 10).gapK_dominated);
}

TEST_CASE("log10 t threshold of the exponential bound") {
  CHECK(theorem3_log10_threshold(1, 0.5) ==
        doctest::Approx(334.922033663304).epsilon(1e-12));
  CHECK(theorem3_log10_threshold(2, 0.5) ==
        doctest::Approx(2129.95272106665).epsilon(1e-12));
  CHECK(theorem3_log10_threshold(1, 0.9) > theorem3_log10_threshold(1, 0.5));
  CHECK(theorem3_log10_threshold(3, 0.5) > theorem3_log10_threshold(2, 0.5));
}
