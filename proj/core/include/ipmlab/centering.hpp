// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "ipmlab/barrier.hpp"
#include "ipmlab/linear_program.hpp"

namespace ipmlab {

/// Path parameter of the centering problem  min c^T x / mu + phi(x).
/// The infinite value selects the pure barrier problem and is a separate
/// state, never a large float.
class Mu {
 public:
  static Mu finite(Real value);
  static Mu infinite() { return Mu(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws DomainError for the infinite tag.
  Real value() const;
  /// c / mu, or zero for the infinite tag.
  Vector scaled_cost(const Vector& c) const;

 private:
  Mu() = default;
  explicit Mu(Real v) : value_(v) {}
  std::optional<Real> value_;
};

inline constexpr Real kVerificationCenteringTol = 1e-10;
inline constexpr Real kSolverCenteringTol = 1e-6;
inline constexpr int kDefaultCenteringCap = 500;

struct CenteringOptions {
  Real tol = kVerificationCenteringTol;
  int max_iterations = kDefaultCenteringCap;
  /// Extra full Newton steps taken after the tolerance is met. Each one
  /// roughly squares the decrement until rounding dominates.
  int polish_steps = 0;
};

struct CenteringResult {
  Vector x;
  Mu mu = Mu::infinite();
  Real newton_decrement = 0;
  /// Newton iterations plus interior backtracks.
  int iterations = 0;
  bool converged = false;
  /// Decrement at every iterate, starting with x0.
  std::vector<Real> decrement_trace;
  Real hessian_condition = 0;
};

/// ||c/mu + grad phi(x)||_x^*; for the infinite tag ||grad phi(x)||_x^*.
Real newton_decrement(const LinearProgram& lp, const Barrier& bar,
                      const Vector& x, const Mu& mu);

/// Damped Newton on c/mu + phi: step 1/(1 + lambda) while lambda >= 1/4,
/// full step below. Steps that would leave the interior are halved.
/// Throws ConvergenceError when the iteration cap is reached.
CenteringResult center(const LinearProgram& lp, const Barrier& bar,
                       const Mu& mu, const Vector& x0,
                       const CenteringOptions& options = {});

/// Minimizer of phi alone.
CenteringResult analytic_center(const LinearProgram& lp, const Barrier& bar,
                                const Vector& x0,
                                const CenteringOptions& options = {});

/// Centers ordered by strictly decreasing mu.
struct CentralPath {
  std::vector<CenteringResult> points;
  Barrier barrier;

  /// gap strictly increasing in mu along the stored points.
  bool gap_monotone(const LinearProgram& lp) const;
};

/// Centers at mu_hi * shrink^k for every k with mu >= mu_lo, warm-starting
/// from the previous center. The first solve starts at x0, or at the LP's
/// interior witness when x0 is empty.
CentralPath trace_path(const LinearProgram& lp, const Barrier& bar, Real mu_hi,
                       Real mu_lo, Real shrink,
                       const CenteringOptions& options = {},
                       const std::optional<Vector>& x0 = std::nullopt);

struct LpSolution {
  Vector x;
  Real value = 0;
  Real final_mu = 0;
  int newton_iterations = 0;
};

/// Log-barrier path following until mu * m <= tol, starting from the
/// analytic center reached from the LP's interior witness.
LpSolution solve_lp(const LinearProgram& lp, Real tol = 1e-6);

/// Inradius via solve_lp(chebyshev_lp(lp)). The returned value is attained
/// by a feasible point of the Chebyshev LP, so it never overshoots.
Real inradius(const LinearProgram& lp, Real tol = 1e-9);

}  // namespace ipmlab
