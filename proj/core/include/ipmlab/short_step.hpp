// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "ipmlab/barrier.hpp"
#include "ipmlab/centering.hpp"
#include "ipmlab/linear_program.hpp"

namespace ipmlab {

inline constexpr Real kDefaultTheta = 0.2;
inline constexpr Real kDefaultGamma = 0.125;
inline constexpr int kMaxSafeguardHalvings = 10;

enum class Termination { kGapTargetReached, kIterationCap, kSafeguardFailure };

std::string_view to_string(Termination t);

struct ShortStepIterate {
  Vector x;
  Real mu = 0;
  Real lambda = 0;
  Real gap = 0;
};

struct ShortStepOptions {
  Real theta = kDefaultTheta;
  Real gamma = kDefaultGamma;
  int cap = 100000;
};

struct ShortStepRun {
  Real theta = 0;
  Real gamma = 0;
  Real nu = 0;
  std::vector<ShortStepIterate> iterates;
  /// Effective gamma of step k -> k+1 after safeguard halvings.
  std::vector<Real> step_gammas;
  int safeguard_halvings = 0;
  Termination termination = Termination::kIterationCap;

  /// Number of steps taken, K.
  int steps() const { return static_cast<int>(iterates.size()) - 1; }
};

/// Short-step path following: mu <- (1 - gamma/sqrt(nu)) mu, then one full
/// Newton step at the new mu. If the new decrement exceeds theta (or the step
/// leaves the interior) the shrink is halved and retried, at most ten times;
/// running out of retries ends the run with kSafeguardFailure.
///
/// Throws PreconditionError if x0 is not in N_theta(mu0).
ShortStepRun short_step(const LinearProgram& lp, const Barrier& bar, Real mu0,
                        const Vector& x0, Real gap_target,
                        const ShortStepOptions& options = {});

struct SegmentPoint {
  Vector x;
  int k = 0;
  Real s = 0;
};

/// `samples` equispaced points (1-s) x^k + s x^{k+1}, s in [0, 1], on every
/// segment of the polygonal iterate curve. Shared endpoints appear once, so
/// samples = 2 yields exactly the iterates.
std::vector<SegmentPoint> segment_points(const ShortStepRun& run, int samples);

/// ceil(ln(mu0/muK) / -ln(1 - gamma/sqrt(nu))).
int predicted_iterations(Real nu, Real gamma, Real mu0, Real muK);

}  // namespace ipmlab
