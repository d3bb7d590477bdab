// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipmlab/barrier.hpp"
#include "ipmlab/linear_program.hpp"
#include "ipmlab/neighborhood.hpp"
#include "ipmlab/short_step.hpp"

namespace ipmlab {

/// Per-point record of the wide-neighborhood certificate chain.
struct AuditPoint {
  int k = 0;
  Real s = 0;
  bool l2_member = false;
  Real mu = 0;
  Real lambda = 0;
  Real gap_x = 0;
  /// gap(x^phi(mu)).
  Real gap_center = 0;
  bool matched = false;
  Real eta = 0;
  Lemma3Hypothesis hypothesis = Lemma3Hypothesis::kUnknown;
  /// y^T s(x) / m.
  Real eta_x = 0;
  Real theta_effective = 0;
  Real dual_residual = 0;
};

struct ChainAudit {
  std::vector<BoundCheck> checks;
  std::vector<AuditPoint> points;
  Real theta = 0;
  Real beta = 0;
  Real omega = 0;
  int membership_failures = 0;
  /// Points whose center gap exceeds every log-barrier gap, so no eta exists.
  int unmatched_points = 0;
  /// Points where the gap is above the eta-sandwich gap threshold; the lower half of
  /// the sandwich is not asserted there.
  int lemma3_unmet_points = 0;
  /// Among those, points where eta / 2 > gap actually happens.
  int lemma3_unconditional_violations = 0;
  std::vector<std::string> notes;

  int failed() const;
  bool passed() const { return failed() == 0 && membership_failures == 0; }
};

struct AuditOptions {
  int samples = 9;
  Real match_tol = kDefaultMatchTol;
  /// Certificate residual allowance, relative to 1 + ||c||_2.
  Real certificate_tol = 1e-6;
  /// Used for the eta-sandwich gap threshold on non-LW instances; computed from the
  /// Chebyshev LP when absent.
  std::optional<Real> inradius;
};

/// Audits every sampled point of the run's polygonal curve: recovers mu with
/// x in N_theta(mu), matches eta(mu) on the log path, builds the dual
/// certificate and checks the slack-ratio, averaging and per-row product
/// bounds, theta_effective <= omega, the gap sandwich, and the two endpoint
/// scale claims.
ChainAudit audit_corollary_chain(const ShortStepRun& run,
                                 const LinearProgram& lp, const Barrier& bar,
                                 const AuditOptions& options = {});

}  // namespace ipmlab
