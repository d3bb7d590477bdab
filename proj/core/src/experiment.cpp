// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/experiment.hpp"

#include <cmath>
#include <utility>

#include "ipmlab/centering.hpp"
#include "ipmlab/neighborhood.hpp"

namespace ipmlab {

AnalyticStart analytic_start(const LinearProgram& lp, const Barrier& bar,
                             Real theta) {
  if (!lp.interior_witness()) {
    throw MissingDataError("analytic_start: the LP has no interior witness");
  }
  CenteringOptions opts;
  opts.polish_steps = 2;
  AnalyticStart out;
  out.x0 = analytic_center(lp, bar, *lp.interior_witness(), opts).x;
  const L2Membership set = l2_membership(lp, bar, out.x0, 0.5 * theta);
  if (!set.member) {
    throw ConvergenceError("analytic_start: center is not in any N_theta(mu)");
  }
  out.mu0 = set.lo * (1.0 + 1e-9);
  return out;
}

ScalingRow run_scaling_cell(int r, Real t, const ScalingOptions& options,
                            ShortStepRun* run_out, ChainAudit* audit_out) {
  const LinearProgram lp = generate_lw({r, t});
  const Barrier bar = options.weighted_barrier ? Barrier::alternating(lp.m())
                                               : Barrier::logarithmic(lp.m());
  const AnalyticStart start = analytic_start(lp, bar, options.theta);

  ScalingRow row;
  row.r = r;
  row.t = t;
  row.nu = bar.nu();
  row.gap0 = gap(lp, start.x0);
  const Real target = options.gap_target
                          ? *options.gap_target
                          : row.gap0 * std::pow(10.0, -options.gap_decades);

  ShortStepOptions ss;
  ss.theta = options.theta;
  ss.gamma = options.gamma;
  ShortStepRun run = short_step(lp, bar, start.mu0, start.x0, target, ss);

  row.K = run.steps();
  row.mu0 = run.iterates.front().mu;
  row.muK = run.iterates.back().mu;
  row.gapK = run.iterates.back().gap;
  row.safeguard_halvings = run.safeguard_halvings;
  row.termination = run.termination;
  row.predicted = predicted_iterations(row.nu, options.gamma, row.mu0, row.muK);
  row.omega = corollary_omega_m(options.theta, row.nu, lp.m());
  row.theorem3_log10_t = theorem3_log10_threshold(r, row.omega);
  row.log10_t = std::log10(t);

  if (options.audit) {
    AuditOptions ao;
    ao.samples = options.audit_samples;
    ChainAudit audit = audit_corollary_chain(run, lp, bar, ao);
    row.audited = true;
    row.audit_checks = static_cast<int>(audit.checks.size());
    row.audit_failed = audit.failed();
    row.audit_membership_failures = audit.membership_failures;
    if (audit_out) *audit_out = std::move(audit);
  }
  if (run_out) *run_out = std::move(run);
  return row;
}

}  // namespace ipmlab
