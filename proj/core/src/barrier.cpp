// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/barrier.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ipmlab {

Barrier::Barrier(BarrierKind kind, Vector weights)
    : kind_(kind), weights_(std::move(weights)), nu_(weights_.sum()) {}

Barrier Barrier::logarithmic(int m) {
  if (m < 1) throw DomainError("Barrier: m must be >= 1");
  return Barrier(BarrierKind::kLog, Vector::Ones(m));
}

Barrier Barrier::weighted(Vector weights) {
  if (weights.size() < 1) throw DomainError("Barrier: empty weight vector");
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights(i) >= 1.0) || !std::isfinite(weights(i))) {
      throw DomainError("Barrier: weights must be finite and >= 1");
    }
  }
  return Barrier(BarrierKind::kWeightedLog, std::move(weights));
}

Barrier Barrier::alternating(int m) {
  if (m < 1) throw DomainError("Barrier: m must be >= 1");
  Vector w(m);
  for (int i = 0; i < m; ++i) w(i) = (i % 2 == 0) ? 2.0 : 1.0;
  return weighted(std::move(w));
}

std::string Barrier::name() const {
  return kind_ == BarrierKind::kLog ? "log" : "weighted-log";
}

namespace {

Vector interior_slacks(const LinearProgram& lp, const Barrier& bar,
                       const Vector& x) {
  if (bar.m() != lp.m()) {
    throw DimensionError("barrier has " + std::to_string(bar.m()) +
                         " weights but the LP has " + std::to_string(lp.m()) +
                         " rows");
  }
  Vector s = slacks(lp, x);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s(i) > 0)) {
      throw NotInteriorError("barrier evaluated outside the interior (slack " +
                             std::to_string(i) + " = " + std::to_string(s(i)) +
                             ")");
    }
  }
  return s;
}

}  // namespace

BarrierEval eval_barrier_derivatives(const LinearProgram& lp,
                                     const Barrier& bar, const Vector& x) {
  const Vector s = interior_slacks(lp, bar, x);
  const Vector inv = s.cwiseInverse();
  BarrierEval out;
  out.gradient = lp.A().transpose() * bar.weights().cwiseProduct(inv);
  const Matrix scaled =
      (bar.weights().cwiseSqrt().cwiseProduct(inv)).asDiagonal() * lp.A();
  out.hessian = scaled.transpose() * scaled;
  return out;
}

BarrierEval eval_barrier(const LinearProgram& lp, const Barrier& bar,
                         const Vector& x) {
  BarrierEval out = eval_barrier_derivatives(lp, bar, x);
  const Vector s = slacks(lp, x);
  Real value = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    value -= bar.weights()(i) * std::log(s(i));
  }
  out.value = value;
  return out;
}

HessianFactor::HessianFactor(const Matrix& H) : llt_(H) {
  if (H.rows() != H.cols() || H.rows() == 0) {
    throw DimensionError("HessianFactor: matrix must be square and non-empty");
  }
  if (llt_.info() != Eigen::Success || !llt_.matrixLLT().allFinite()) {
    throw FactorizationError("Cholesky factorization failed: matrix is not "
                             "numerically positive definite");
  }
  const auto diag = llt_.matrixLLT().diagonal();
  if (!(diag.minCoeff() > 0)) {
    throw FactorizationError("Cholesky factorization produced a zero pivot");
  }
}

Real HessianFactor::local_norm(const Vector& h) const {
  return (llt_.matrixU() * h).norm();
}

Real HessianFactor::dual_norm(const Vector& h) const {
  return llt_.matrixL().solve(h).norm();
}

Real HessianFactor::dual_inner(const Vector& h, const Vector& k) const {
  return llt_.matrixL().solve(h).dot(llt_.matrixL().solve(k));
}

Real HessianFactor::condition_estimate() const {
  const auto diag = llt_.matrixLLT().diagonal();
  const Real ratio = diag.maxCoeff() / diag.minCoeff();
  return ratio * ratio;
}

Real local_norm(const Matrix& H, const Vector& h) {
  return HessianFactor(H).local_norm(h);
}

Real dual_norm(const Matrix& H, const Vector& h) {
  return HessianFactor(H).dual_norm(h);
}

EllipsoidLinopt ellipsoid_linopt(const Ellipsoid& e, const Vector& a) {
  if (a.size() != e.center.size()) {
    throw DimensionError("ellipsoid_linopt: dimension mismatch");
  }
  if (a.isZero(0.0)) {
    throw DomainError("ellipsoid_linopt: a = 0 has no unique maximizer");
  }
  const HessianFactor factor(e.Q);
  const Vector qa = factor.solve(a);
  const Real radius = std::sqrt(a.dot(qa));
  const Real mid = a.dot(e.center);
  EllipsoidLinopt out;
  out.max = mid + radius;
  out.min = mid - radius;
  out.argmax = e.center + qa / radius;
  out.argmin = e.center - qa / radius;
  return out;
}

Vector ellipsoid_boundary_point(const Ellipsoid& e, const Vector& direction) {
  const Real len = std::sqrt(direction.dot(e.Q * direction));
  if (!(len > 0)) {
    throw DomainError("ellipsoid_boundary_point: zero direction");
  }
  return e.center + direction / len;
}

Ellipsoid dikin_ellipsoid(const LinearProgram& lp, const Barrier& bar,
                          const Vector& x) {
  return Ellipsoid{eval_barrier_derivatives(lp, bar, x).hessian, x};
}

Real c_nu(Real nu) {
  if (!(nu >= 0)) throw DomainError("c_nu: nu must be non-negative");
  return nu + 2.0 * std::sqrt(nu);
}

ScCheck check_sc_inequality(const LinearProgram& lp, const Barrier& bar,
                            const Vector& x, const Vector& h, Real fd_step,
                            Real tolerance) {
  if (h.size() != x.size()) {
    throw DimensionError("check_sc_inequality: dimension mismatch");
  }
  const Real hnorm = h.norm();
  if (!(hnorm > 0)) throw DomainError("check_sc_inequality: h = 0");
  const Real step = fd_step * (x.norm() + 1.0) / hnorm;

  const Vector forward = x + step * h;
  const Vector backward = x - step * h;
  if (!is_interior(lp, forward) || !is_interior(lp, backward)) {
    throw NotInteriorError("check_sc_inequality: x +/- step*h leaves the "
                           "interior");
  }
  const auto hess_quad = [&](const Vector& at) {
    const Matrix H = eval_barrier_derivatives(lp, bar, at).hessian;
    return h.dot(H * h);
  };
  const Real second = hess_quad(x);

  ScCheck out;
  out.step = step;
  out.third_derivative = (hess_quad(forward) - hess_quad(backward)) /
                         (2.0 * step);
  out.lhs = std::abs(out.third_derivative);
  out.rhs = 2.0 * std::pow(second, 1.5);
  out.satisfied = out.lhs <= out.rhs * (1.0 + tolerance);
  return out;
}

InequalityCheck check_nu_sc(const LinearProgram& lp, const Barrier& bar,
                            const Vector& x, const Vector& h, Real tolerance) {
  const BarrierEval ev = eval_barrier_derivatives(lp, bar, x);
  InequalityCheck out;
  out.lhs = std::abs(ev.gradient.dot(h));
  out.rhs = std::sqrt(bar.nu() * h.dot(ev.hessian * h));
  out.satisfied = out.lhs <= out.rhs + tolerance * (1.0 + out.rhs);
  return out;
}

}  // namespace ipmlab
