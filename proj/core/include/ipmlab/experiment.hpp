// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "ipmlab/barrier.hpp"
#include "ipmlab/corollary_audit.hpp"
#include "ipmlab/linear_program.hpp"
#include "ipmlab/short_step.hpp"

namespace ipmlab {

/// A short-step run started at the barrier's analytic center, with mu0 the
/// smallest mu at which the center sits in N_{theta/2}(mu).
struct AnalyticStart {
  Vector x0;
  Real mu0 = 0;
};

AnalyticStart analytic_start(const LinearProgram& lp, const Barrier& bar,
                             Real theta);

struct ScalingOptions {
  Real theta = kDefaultTheta;
  Real gamma = kDefaultGamma;
  /// Decades of gap reduction from gap(x0).
  Real gap_decades = 6.0;
  /// Absolute gap target; overrides gap_decades when set.
  std::optional<Real> gap_target;
  bool weighted_barrier = false;
  bool audit = true;
  int audit_samples = 9;
};

struct ScalingRow {
  int r = 0;
  Real t = 0;
  Real nu = 0;
  int K = 0;
  int predicted = 0;
  Real mu0 = 0;
  Real muK = 0;
  Real gap0 = 0;
  Real gapK = 0;
  int safeguard_halvings = 0;
  Termination termination = Termination::kIterationCap;
  bool audited = false;
  int audit_checks = 0;
  int audit_failed = 0;
  int audit_membership_failures = 0;
  Real omega = 0;
  Real theorem3_log10_t = 0;
  Real log10_t = 0;

  /// K within a factor 3 of predicted_iterations for the realized decay.
  bool within_band() const {
    return K <= 3 * predicted && 3 * K >= predicted;
  }
};

/// One cell of the scaling experiment on LW_r(t).
ScalingRow run_scaling_cell(int r, Real t, const ScalingOptions& options,
                            ShortStepRun* run_out = nullptr,
                            ChainAudit* audit_out = nullptr);

}  // namespace ipmlab
