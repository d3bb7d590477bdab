// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/short_step.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ipmlab {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kGapTargetReached:
      return "gap_target_reached";
    case Termination::kIterationCap:
      return "iteration_cap";
    case Termination::kSafeguardFailure:
      return "safeguard_failure";
  }
  return "unknown";
}

namespace {

struct NewtonStep {
  Vector x;
  Real lambda = 0;
  bool interior = false;
};

NewtonStep newton_step(const LinearProgram& lp, const Barrier& bar,
                       const Vector& x, Real mu) {
  const BarrierEval ev = eval_barrier_derivatives(lp, bar, x);
  const HessianFactor factor(ev.hessian);
  const Vector direction = -factor.solve(lp.c() / mu + ev.gradient);
  NewtonStep out;
  out.x = x + direction;
  out.interior = is_interior(lp, out.x);
  if (out.interior) {
    out.lambda = newton_decrement(lp, bar, out.x, Mu::finite(mu));
  }
  return out;
}

}  // namespace

ShortStepRun short_step(const LinearProgram& lp, const Barrier& bar, Real mu0,
                        const Vector& x0, Real gap_target,
                        const ShortStepOptions& options) {
  if (!(options.theta > 0 && options.theta < 1)) {
    throw DomainError("short_step: theta must lie in (0, 1)");
  }
  if (!(gap_target > 0)) {
    throw DomainError("short_step: gap_target must be positive");
  }
  if (!(mu0 > 0)) throw DomainError("short_step: mu0 must be positive");
  const Real sqrt_nu = std::sqrt(bar.nu());
  if (!(options.gamma > 0 && options.gamma < sqrt_nu)) {
    throw DomainError("short_step: gamma must lie in (0, sqrt(nu))");
  }

  const Real lambda0 = newton_decrement(lp, bar, x0, Mu::finite(mu0));
  if (!(lambda0 <= options.theta)) {
    throw PreconditionError("short_step: x0 is not in N_theta(mu0): decrement " +
                            std::to_string(lambda0) + " > theta " +
                            std::to_string(options.theta));
  }

  ShortStepRun run;
  run.theta = options.theta;
  run.gamma = options.gamma;
  run.nu = bar.nu();
  run.iterates.push_back({x0, mu0, lambda0, gap(lp, x0)});

  while (true) {
    const ShortStepIterate& cur = run.iterates.back();
    if (cur.gap <= gap_target) {
      run.termination = Termination::kGapTargetReached;
      return run;
    }
    if (run.steps() >= options.cap) {
      run.termination = Termination::kIterationCap;
      return run;
    }

    Real step_gamma = options.gamma;
    bool accepted = false;
    for (int attempt = 0; attempt <= kMaxSafeguardHalvings; ++attempt) {
      const Real mu = cur.mu * (1.0 - step_gamma / sqrt_nu);
      NewtonStep next = newton_step(lp, bar, cur.x, mu);
      if (next.interior && next.lambda <= options.theta) {
        const Real next_gap = gap(lp, next.x);
        run.iterates.push_back({std::move(next.x), mu, next.lambda, next_gap});
        run.step_gammas.push_back(step_gamma);
        accepted = true;
        break;
      }
      if (attempt < kMaxSafeguardHalvings) {
        step_gamma *= 0.5;
        ++run.safeguard_halvings;
      }
    }
    if (!accepted) {
      run.termination = Termination::kSafeguardFailure;
      return run;
    }
  }
}

std::vector<SegmentPoint> segment_points(const ShortStepRun& run,
                                         int samples) {
  if (samples < 2) throw DomainError("segment_points: samples must be >= 2");
  if (run.iterates.size() < 2) {
    throw DomainError("segment_points: run has fewer than two iterates");
  }
  std::vector<SegmentPoint> out;
  out.reserve(1 + (run.iterates.size() - 1) *
                      static_cast<std::size_t>(samples - 1));
  out.push_back({run.iterates.front().x, 0, 0.0});
  for (std::size_t k = 0; k + 1 < run.iterates.size(); ++k) {
    const Vector& a = run.iterates[k].x;
    const Vector& b = run.iterates[k + 1].x;
    for (int j = 1; j < samples; ++j) {
      const Real s = static_cast<Real>(j) / static_cast<Real>(samples - 1);
      Vector x = (j == samples - 1) ? b : Vector((1.0 - s) * a + s * b);
      out.push_back({std::move(x), static_cast<int>(k), s});
    }
  }
  return out;
}

int predicted_iterations(Real nu, Real gamma, Real mu0, Real muK) {
  if (!(nu > 0 && gamma > 0 && mu0 > 0 && muK > 0)) {
    throw DomainError("predicted_iterations: arguments must be positive");
  }
  const Real sqrt_nu = std::sqrt(nu);
  if (gamma >= sqrt_nu) {
    throw DomainError("predicted_iterations: gamma must be < sqrt(nu)");
  }
  if (muK > mu0) {
    throw DomainError("predicted_iterations: muK must not exceed mu0");
  }
  if (muK == mu0) return 0;
  const Real per_step = -std::log1p(-gamma / sqrt_nu);
  return static_cast<int>(std::ceil(std::log(mu0 / muK) / per_step));
}

}  // namespace ipmlab
