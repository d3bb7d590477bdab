// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/centering.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace ipmlab {

Mu Mu::finite(Real value) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw DomainError("Mu: finite mu must be a positive real");
  }
  return Mu(value);
}

Real Mu::value() const {
  if (!value_) throw DomainError("Mu: infinite mu has no finite value");
  return *value_;
}

Vector Mu::scaled_cost(const Vector& c) const {
  if (!value_) return Vector::Zero(c.size());
  return c / *value_;
}

Real newton_decrement(const LinearProgram& lp, const Barrier& bar,
                      const Vector& x, const Mu& mu) {
  const BarrierEval ev = eval_barrier_derivatives(lp, bar, x);
  const HessianFactor factor(ev.hessian);
  return factor.dual_norm(mu.scaled_cost(lp.c()) + ev.gradient);
}

CenteringResult center(const LinearProgram& lp, const Barrier& bar,
                       const Mu& mu, const Vector& x0,
                       const CenteringOptions& options) {
  if (!(options.tol > 0) || options.tol > 0.25) {
    throw DomainError("center: tol must lie in (0, 0.25]");
  }
  if (!is_interior(lp, x0)) {
    throw NotInteriorError("center: starting point is not strictly interior");
  }
  const Vector scaled_c = mu.scaled_cost(lp.c());

  CenteringResult out;
  out.mu = mu;
  Vector x = x0;
  int work = 0;
  int polished = 0;
  while (true) {
    const BarrierEval ev = eval_barrier_derivatives(lp, bar, x);
    const HessianFactor factor(ev.hessian);
    const Vector residual = scaled_c + ev.gradient;
    const Vector direction = -factor.solve(residual);
    const Real lambda = std::sqrt(std::max<Real>(0, -residual.dot(direction)));
    out.decrement_trace.push_back(lambda);
    if (lambda <= options.tol && polished < options.polish_steps) {
      const Vector trial = x + direction;
      ++polished;
      if (is_interior(lp, trial) &&
          newton_decrement(lp, bar, trial, mu) < lambda) {
        x = trial;
        continue;
      }
      polished = options.polish_steps;
    }
    if (lambda <= options.tol) {
      out.x = std::move(x);
      out.newton_decrement = lambda;
      out.iterations = work;
      out.converged = true;
      out.hessian_condition = factor.condition_estimate();
      return out;
    }
    if (work >= options.max_iterations) break;

    Real step = lambda >= 0.25 ? 1.0 / (1.0 + lambda) : 1.0;
    Vector trial = x + step * direction;
    ++work;
    while (!is_interior(lp, trial)) {
      if (work >= options.max_iterations) break;
      step *= 0.5;
      trial = x + step * direction;
      ++work;
    }
    if (!is_interior(lp, trial)) break;
    x = std::move(trial);
  }
  throw ConvergenceError("center: iteration cap " +
                         std::to_string(options.max_iterations) +
                         " reached (last decrement " +
                         std::to_string(out.decrement_trace.back()) + ")");
}

CenteringResult analytic_center(const LinearProgram& lp, const Barrier& bar,
                                const Vector& x0,
                                const CenteringOptions& options) {
  return center(lp, bar, Mu::infinite(), x0, options);
}

bool CentralPath::gap_monotone(const LinearProgram& lp) const {
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(gap(lp, points[k].x) < gap(lp, points[k - 1].x))) return false;
  }
  return true;
}

CentralPath trace_path(const LinearProgram& lp, const Barrier& bar, Real mu_hi,
                       Real mu_lo, Real shrink,
                       const CenteringOptions& options,
                       const std::optional<Vector>& x0) {
  if (!(mu_hi > mu_lo) || !(mu_lo > 0)) {
    throw DomainError("trace_path: need mu_hi > mu_lo > 0");
  }
  if (!(shrink > 0 && shrink < 1)) {
    throw DomainError("trace_path: shrink must lie in (0, 1)");
  }
  Vector start;
  if (x0) {
    start = *x0;
  } else if (lp.interior_witness()) {
    start = *lp.interior_witness();
  } else {
    throw MissingDataError("trace_path: no starting point and no interior "
                           "witness");
  }

  CentralPath path{{}, bar};
  const Real floor = mu_lo * (1.0 - 1e-12);
  for (int k = 0;; ++k) {
    const Real mu = mu_hi * std::pow(shrink, k);
    if (mu < floor) break;
    CenteringResult res = center(lp, bar, Mu::finite(mu), start, options);
    start = res.x;
    path.points.push_back(std::move(res));
  }
  return path;
}

namespace {

// Size of the decrement that rounding alone produces: the residual
// c/mu + grad phi is a difference of terms of size |c|/mu + sum w|a_i|/s_i,
// and its error is amplified by H^{-1/2}.
Real decrement_rounding_floor(const LinearProgram& lp, const Barrier& bar,
                              const Vector& x, Real mu) {
  constexpr Real kFactor = 64;
  const Vector s = slacks(lp, x);
  Vector terms = lp.c().cwiseAbs() / mu;
  Matrix H = Matrix::Zero(lp.n(), lp.n());
  for (int i = 0; i < lp.m(); ++i) {
    const Real w = bar.weights()(i);
    terms += w * lp.A().row(i).transpose().cwiseAbs() / s(i);
    H.noalias() += (w / (s(i) * s(i))) * lp.A().row(i).transpose() *
                   lp.A().row(i);
  }
  const Real lambda_min =
      Eigen::SelfAdjointEigenSolver<Matrix>(H, Eigen::EigenvaluesOnly)
          .eigenvalues()(0);
  if (!(lambda_min > 0)) return 0.25;
  return kFactor * std::numeric_limits<Real>::epsilon() * terms.norm() /
         std::sqrt(lambda_min);
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, Real tol) {
  if (!(tol > 0)) throw DomainError("solve_lp: tol must be positive");
  if (!lp.interior_witness()) {
    throw MissingDataError("solve_lp: the LP has no interior witness");
  }
  const Barrier bar = Barrier::logarithmic(lp.m());
  const CenteringOptions opts{kSolverCenteringTol, kDefaultCenteringCap};
  LpSolution out;

  CenteringResult ac = analytic_center(lp, bar, *lp.interior_witness(), opts);
  out.newton_iterations += ac.iterations;
  Vector x = ac.x;

  const BarrierEval ev = eval_barrier_derivatives(lp, bar, x);
  const Real cost_norm = HessianFactor(ev.hessian).dual_norm(lp.c());
  if (!(cost_norm > 0)) {
    // c = 0: every feasible point is optimal.
    out.x = x;
    out.value = lp.c().dot(x);
    return out;
  }

  // The analytic center has decrement 1/4 at this mu.
  Real mu = 4.0 * cost_norm;
  const Real m = static_cast<Real>(lp.m());
  constexpr Real kShrink = 0.2;
  while (true) {
    CenteringOptions step_opts = opts;
    step_opts.tol = std::min<Real>(
        0.25, std::max(opts.tol, decrement_rounding_floor(lp, bar, x, mu)));
    CenteringResult res = center(lp, bar, Mu::finite(mu), x, step_opts);
    out.newton_iterations += res.iterations;
    x = std::move(res.x);
    if (mu * m <= tol) break;
    mu = std::max(mu * kShrink, 0.999999 * tol / m);
  }
  out.x = x;
  out.value = lp.c().dot(x);
  out.final_mu = mu;
  return out;
}

Real inradius(const LinearProgram& lp, Real tol) {
  const LinearProgram cheb = chebyshev_lp(lp);
  return -solve_lp(cheb, tol).value;
}

}  // namespace ipmlab
