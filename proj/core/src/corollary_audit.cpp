// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/corollary_audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ipmlab/centering.hpp"

namespace ipmlab {

int ChainAudit::failed() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [](const BoundCheck& c) { return !c.satisfied; }));
}

namespace {

std::string point_tag(const SegmentPoint& p) {
  return "[k=" + std::to_string(p.k) + ",s=" + std::to_string(p.s) + "]";
}

}  // namespace

ChainAudit audit_corollary_chain(const ShortStepRun& run,
                                 const LinearProgram& lp, const Barrier& bar,
                                 const AuditOptions& options) {
  if (run.iterates.empty()) {
    throw DomainError("audit_corollary_chain: empty run");
  }
  const Real theta = run.theta;
  const Real m = static_cast<Real>(lp.m());
  const Real nu = bar.nu();

  ChainAudit audit;
  audit.theta = theta;
  audit.beta = beta(theta);
  audit.omega = corollary_omega_m(theta, nu, m);
  const Real b = audit.beta;
  const Real slack_ratio_floor = (1.0 - b) / (1.0 + c_nu(nu));
  const Real averaging_factor = 1.0 / ((1.0 + c_nu(m)) * (1.0 + b));

  std::optional<Real> rho = options.inradius;
  if (!rho && lp.interior_witness()) {
    try {
      rho = inradius(lp);
    } catch (const Error&) {
      audit.notes.push_back("inradius unavailable; eta-sandwich gap threshold unknown");
    }
  }

  PathSearcher log_path(lp, Barrier::logarithmic(lp.m()));
  CenteringOptions center_opts;
  center_opts.polish_steps = 2;

  std::vector<SegmentPoint> pts;
  if (run.iterates.size() >= 2) {
    pts = segment_points(run, options.samples);
  } else {
    pts.push_back({run.iterates.front().x, 0, 0.0});
  }

  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    const SegmentPoint& p = pts[idx];
    const std::string tag = point_tag(p);
    AuditPoint rec;
    rec.k = p.k;
    rec.s = p.s;
    rec.gap_x = gap(lp, p.x);

    const L2Membership set = l2_membership(lp, bar, p.x, theta);
    if (!set.member) {
      ++audit.membership_failures;
      audit.checks.push_back(make_check("l2.membership" + tag,
                                        std::numeric_limits<Real>::infinity(),
                                        theta, "short-step"));
      audit.points.push_back(rec);
      continue;
    }
    rec.l2_member = true;
    rec.mu = representative_mu(lp, bar, p.x, set);
    rec.lambda = newton_decrement(lp, bar, p.x, Mu::finite(rec.mu));
    audit.checks.push_back(
        make_check("l2.membership" + tag, rec.lambda, theta, "short-step"));

    const Vector xc = center(lp, bar, Mu::finite(rec.mu), p.x, center_opts).x;
    rec.gap_center = gap(lp, xc);

    EtaMatch match;
    try {
      match = match_eta(lp, log_path, rec.gap_center, options.match_tol, rho);
    } catch (const DomainError&) {
      ++audit.unmatched_points;
      audit.points.push_back(rec);
      continue;
    }
    rec.matched = true;
    rec.eta = match.eta;
    rec.hypothesis = match.hypothesis;

    const WideCertificate cert =
        certificate_from_log_center(lp, p.x, match.eta, match.log_center);
    rec.eta_x = cert.mu;
    rec.theta_effective = cert.theta_effective;
    rec.dual_residual = cert.dual_residual;

    const Vector s = slacks(lp, p.x);
    const Vector s_ln = slacks(lp, match.log_center);
    for (int i = 0; i < lp.m(); ++i) {
      const std::string row = "[" + std::to_string(i) + "]";
      audit.checks.push_back(make_check("coro_proof_1" + tag + row,
                                        slack_ratio_floor, s(i) / s_ln(i),
                                        "coro_proof_1"));
      audit.checks.push_back(make_check("coro_proof_3" + tag + row,
                                        slack_ratio_floor * match.eta,
                                        cert.y(i) * s(i), "coro_proof_3"));
    }
    audit.checks.push_back(make_check("coro_proof_2" + tag,
                                      averaging_factor * cert.mu, match.eta,
                                      "coro_proof_2"));
    audit.checks.push_back(make_check("wide.theta_effective" + tag,
                                      cert.theta_effective, audit.omega,
                                      "coro_proof_4"));
    audit.checks.push_back(make_check(
        "certificate.dual_residual" + tag, cert.dual_residual,
        options.certificate_tol * (1.0 + lp.c().norm()), "coro_proof_2"));
    audit.checks.push_back(make_check("lemma3.upper" + tag, rec.gap_center,
                                      m * match.eta, "lemma3"));
    if (match.hypothesis == Lemma3Hypothesis::kMet) {
      audit.checks.push_back(make_check("lemma3.lower" + tag, match.eta / 2.0,
                                        rec.gap_center, "lemma3"));
    } else {
      ++audit.lemma3_unmet_points;
      if (match.eta / 2.0 > rec.gap_center) {
        ++audit.lemma3_unconditional_violations;
      }
    }

    if (idx == 0) {
      const Real g0 = gap(lp, run.iterates.front().x);
      audit.checks.push_back(make_check(
          "endpoint.eta_x0", (1.0 - b) / ((1.0 + b) * m * (1.0 + c_nu(nu))) * g0,
          cert.mu, "coro_endpoint"));
    }
    if (idx + 1 == pts.size()) {
      const Real gK = gap(lp, run.iterates.back().x);
      if (match.hypothesis == Lemma3Hypothesis::kMet) {
        audit.checks.push_back(make_check(
            "endpoint.eta_xK", cert.mu,
            2.0 * (1.0 + b) * (1.0 + c_nu(m)) / (1.0 - b) * gK,
            "coro_endpoint"));
      } else {
        audit.notes.push_back("endpoint x^K above the eta-sandwich gap threshold; "
                              "eta_xK bound not asserted");
      }
    }
    audit.points.push_back(rec);
  }

  audit.notes.push_back(
      "endpoint scale claim audited with eta_K = eta_{x^K}; the literal "
      "eta_K = eta_{x^0} reading is not asserted");
  return audit;
}

}  // namespace ipmlab
