// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <string>

#include <doctest.h>

#include "ipmlab/corollary_audit.hpp"
#include "ipmlab/experiment.hpp"
#include "test_helpers.hpp"

using namespace ipmlab;

namespace {

std::string stem(const std::string& label) {
  return label.substr(0, label.find('['));
}

}  // namespace

TEST_CASE("audit of a log-barrier run") {
  ScalingOptions opts;
  opts.gap_decades = 2;
  opts.audit_samples = 3;
  ShortStepRun run;
  ChainAudit audit;
  const ScalingRow row = run_scaling_cell(2, 10.0, opts, &run, &audit);
  CHECK(row.audited);
  CHECK(audit.passed());
  CHECK(audit.failed() == 0);
  CHECK(audit.membership_failures == 0);
  CHECK(audit.unmatched_points == 0);
  CHECK(audit.lemma3_unconditional_violations == 0);
  CHECK(audit.points.size() == static_cast<std::size_t>(2 * run.steps() + 1));
  CHECK(row.audit_checks == static_cast<int>(audit.checks.size()));
  CHECK(audit.beta == doctest::Approx(beta(0.2)));
  CHECK(audit.omega == doctest::Approx(0.996537260491949).epsilon(1e-12));

  std::set<std::string> stems;
  for (const auto& c : audit.checks) stems.insert(stem(c.label));
  for (const char* expected :
       {"l2.membership", "coro_proof_1", "coro_proof_2", "coro_proof_3",
        "wide.theta_effective", "certificate.dual_residual", "lemma3.upper",
        "endpoint.eta_x0"}) {
    CHECK(stems.count(expected) == 1);
  }
  for (const auto& p : audit.points) {
    CHECK(p.l2_member);
    CHECK(p.matched);
    CHECK(p.lambda <= 0.2 * (1 + 1e-8));
    CHECK(p.theta_effective <= audit.omega);
    CHECK(p.dual_residual <= 1e-6 * 2);
    CHECK(p.eta_x > 0);
  }
  CHECK_FALSE(audit.notes.empty());
}

TEST_CASE("audit of a weighted-barrier run") {
  ScalingOptions opts;
  opts.gap_decades = 2;
  opts.audit_samples = 2;
  opts.weighted_barrier = true;
  ChainAudit audit;
  const ScalingRow row = run_scaling_cell(2, 10.0, opts, nullptr, &audit);
  CHECK(row.nu == 11.0);
  CHECK(audit.failed() == 0);
  CHECK(audit.membership_failures == 0);
}

TEST_CASE("audit on a generic LP computes the inradius") {
  const LinearProgram lp = ipmlab::testing::random_bounded_lp(2, 4, 5);
  const LinearProgram with_opt = lp.with_optimal_value(min_value_oracle(lp));
  const Barrier bar = Barrier::logarithmic(with_opt.m());
  const AnalyticStart start = analytic_start(with_opt, bar, 0.2);
  const ShortStepRun run = short_step(with_opt, bar, start.mu0, start.x0,
                                      gap(with_opt, start.x0) * 1e-2);
  AuditOptions opts;
  opts.samples = 2;
  const ChainAudit audit = audit_corollary_chain(run, with_opt, bar, opts);
  CHECK(audit.failed() == 0);
  CHECK(audit.membership_failures == 0);
  CHECK(audit.lemma3_unmet_points <= static_cast<int>(audit.points.size()));
}

TEST_CASE("failed() counts unsatisfied checks") {
  ChainAudit audit;
  audit.checks.push_back(make_check("a", 1, 2, "x"));
  audit.checks.push_back(make_check("b", 3, 2, "x"));
  CHECK(audit.failed() == 1);
  CHECK_FALSE(audit.passed());
  audit.checks.pop_back();
  CHECK(audit.passed());
  audit.membership_failures = 1;
  CHECK_FALSE(audit.passed());
}
