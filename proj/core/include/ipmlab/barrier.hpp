// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include <Eigen/Cholesky>

#include "ipmlab/linear_program.hpp"
#include "ipmlab/types.hpp"

namespace ipmlab {

enum class BarrierKind { kLog, kWeightedLog };

/// A nu-self-concordant barrier on {x : A x < b}.
///
/// Log barrier: phi(x) = -sum ln s_i, nu = m.
/// Weighted log: phi(x) = -sum w_i ln s_i with w_i >= 1, nu = sum w_i.
///
/// The handle carries only the barrier data; evaluation takes the LP
/// explicitly and checks that the weight count matches its row count.
class Barrier {
 public:
  static Barrier logarithmic(int m);
  static Barrier weighted(Vector weights);
  /// Weights (2, 1, 2, 1, ...) of length m.
  static Barrier alternating(int m);

  BarrierKind kind() const { return kind_; }
  int m() const { return static_cast<int>(weights_.size()); }
  Real nu() const { return nu_; }
  /// Per-row weights; all ones for the log barrier.
  const Vector& weights() const { return weights_; }
  /// "log" or "weighted-log".
  std::string name() const;

 private:
  Barrier(BarrierKind kind, Vector weights);

  BarrierKind kind_;
  Vector weights_;
  Real nu_;
};

struct BarrierEval {
  Real value = 0;
  Vector gradient;
  Matrix hessian;
};

/// Value, gradient sum w_i a_i / s_i and Hessian sum w_i a_i a_i^T / s_i^2.
/// Throws NotInteriorError if any slack is non-positive.
BarrierEval eval_barrier(const LinearProgram& lp, const Barrier& bar,
                         const Vector& x);

/// Gradient and Hessian only; skips the log evaluations.
BarrierEval eval_barrier_derivatives(const LinearProgram& lp,
                                     const Barrier& bar, const Vector& x);

/// Cholesky factor of a positive-definite matrix. Construction throws
/// FactorizationError instead of regularizing.
class HessianFactor {
 public:
  explicit HessianFactor(const Matrix& H);

  Vector solve(const Vector& rhs) const { return llt_.solve(rhs); }
  /// sqrt(h^T H h).
  Real local_norm(const Vector& h) const;
  /// sqrt(h^T H^{-1} h).
  Real dual_norm(const Vector& h) const;
  /// h^T H^{-1} k.
  Real dual_inner(const Vector& h, const Vector& k) const;
  /// (max diag L / min diag L)^2, a cheap lower estimate of cond(H).
  Real condition_estimate() const;

 private:
  Eigen::LLT<Matrix> llt_;
};

Real local_norm(const Matrix& H, const Vector& h);
Real dual_norm(const Matrix& H, const Vector& h);

/// E(Q, center) = {x : (x - center)^T Q (x - center) <= 1}.
struct Ellipsoid {
  Matrix Q;
  Vector center;
};

struct EllipsoidLinopt {
  Real max = 0;
  Real min = 0;
  Vector argmax;
  Vector argmin;
};

/// max/min of a^T x over an ellipsoid: a^T center +/- sqrt(a^T Q^{-1} a).
/// Throws DomainError for a = 0.
EllipsoidLinopt ellipsoid_linopt(const Ellipsoid& e, const Vector& a);

/// center + d / ||d||_Q, the boundary point in direction d.
Vector ellipsoid_boundary_point(const Ellipsoid& e, const Vector& direction);

/// E(hessian of the barrier at x, x).
Ellipsoid dikin_ellipsoid(const LinearProgram& lp, const Barrier& bar,
                          const Vector& x);

/// C_nu = nu + 2 sqrt(nu).
Real c_nu(Real nu);

struct InequalityCheck {
  Real lhs = 0;
  Real rhs = 0;
  bool satisfied = false;
};

inline constexpr Real kDefaultFdStep = 1e-5;
inline constexpr Real kThirdDerivativeTolerance = 5e-3;
inline constexpr Real kNuScTolerance = 1e-8;

struct ScCheck : InequalityCheck {
  /// Signed finite-difference estimate of D^3 phi(x)[h,h,h].
  Real third_derivative = 0;
  Real step = 0;
};

/// |D^3 phi(x)[h,h,h]| <= 2 (D^2 phi(x)[h,h])^{3/2}, the left side by a
/// central difference of h^T H(.) h. The displacement along h has length
/// fd_step * (||x|| + 1). Throws NotInteriorError if x +/- step leaves the
/// domain.
ScCheck check_sc_inequality(const LinearProgram& lp, const Barrier& bar,
                            const Vector& x, const Vector& h,
                            Real fd_step = kDefaultFdStep,
                            Real tolerance = kThirdDerivativeTolerance);

/// |grad phi(x)^T h| <= sqrt(nu h^T H h); passes within tolerance*(1+rhs).
InequalityCheck check_nu_sc(const LinearProgram& lp, const Barrier& bar,
                            const Vector& x, const Vector& h,
                            Real tolerance = kNuScTolerance);

}  // namespace ipmlab
