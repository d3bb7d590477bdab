// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/linear_program.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace ipmlab {

LinearProgram::LinearProgram(Matrix A, Vector b, Vector c,
                             std::optional<Real> optimal_value,
                             std::optional<Vector> interior_witness,
                             std::optional<LwParams> family)
    : A_(std::move(A)),
      b_(std::move(b)),
      c_(std::move(c)),
      optimal_value_(optimal_value),
      witness_(std::move(interior_witness)),
      family_(family) {
  if (A_.rows() == 0 || A_.cols() == 0) {
    throw DimensionError("LinearProgram: A must be non-empty");
  }
  if (b_.size() != A_.rows()) {
    throw DimensionError("LinearProgram: b has length " +
                         std::to_string(b_.size()) + ", expected " +
                         std::to_string(A_.rows()));
  }
  if (c_.size() != A_.cols()) {
    throw DimensionError("LinearProgram: c has length " +
                         std::to_string(c_.size()) + ", expected " +
                         std::to_string(A_.cols()));
  }
  if (witness_) {
    if (witness_->size() != A_.cols()) {
      throw DimensionError("LinearProgram: interior witness has wrong length");
    }
    if (!is_interior(*this, *witness_)) {
      throw NotInteriorError(
          "LinearProgram: interior witness is not strictly feasible");
    }
  }
}

LinearProgram LinearProgram::with_optimal_value(Real value) const {
  return LinearProgram(A_, b_, c_, value, witness_, family_);
}

LinearProgram LinearProgram::with_interior_witness(Vector witness) const {
  return LinearProgram(A_, b_, c_, optimal_value_, std::move(witness), family_);
}

Vector slacks(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.n()) {
    throw DimensionError("slacks: x has length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(lp.n()));
  }
  return lp.b() - lp.A() * x;
}

bool is_interior(const LinearProgram& lp, const Vector& x) {
  return (slacks(lp, x).array() > 0).all();
}

Real gap(const LinearProgram& lp, const Vector& x) {
  if (!lp.optimal_value()) {
    throw MissingDataError("gap: optimal value of the LP is not known");
  }
  if (x.size() != lp.n()) {
    throw DimensionError("gap: dimension mismatch");
  }
  return lp.c().dot(x) - *lp.optimal_value();
}

Real lw_coupling_coefficient(Real t, int j) {
  return std::exp((1.0 - std::ldexp(1.0, -j)) * std::log(t));
}

namespace {

void validate(const LwParams& p) {
  if (p.r < 1) throw DomainError("LW: r must be >= 1");
  if (!(p.t > 1.0) || !std::isfinite(p.t)) {
    throw DomainError("LW: t must be a finite real > 1");
  }
}

}  // namespace

Vector lw_interior_point(const LwParams& p) {
  validate(p);
  Vector x(p.variables());
  for (int j = 1; j <= p.r; ++j) {
    x(2 * j - 2) = std::ldexp(1.0, -j);
    x(2 * j - 1) = std::ldexp(1.0, -j);
  }
  return x;
}

LinearProgram generate_lw(const LwParams& p) {
  validate(p);
  const int n = p.variables();
  const int m = p.constraints();
  const Real t = p.t;
  Matrix A = Matrix::Zero(m, n);
  Vector b = Vector::Zero(m);

  // Variable x_k lives at column k-1.
  int row = 0;
  A(row, 0) = 1.0;
  b(row++) = t * t;
  A(row, 1) = 1.0;
  b(row++) = t;
  for (int j = 1; j <= p.r - 1; ++j) {
    A(row, 2 * j) = 1.0;
    A(row++, 2 * j - 2) = -t;

    A(row, 2 * j) = 1.0;
    A(row++, 2 * j - 1) = -t;

    const Real coupling = lw_coupling_coefficient(t, j);
    A(row, 2 * j + 1) = 1.0;
    A(row, 2 * j - 2) = -coupling;
    A(row++, 2 * j - 1) = -coupling;
  }
  A(row++, 2 * p.r - 2) = -1.0;
  A(row++, 2 * p.r - 1) = -1.0;

  Vector c = Vector::Zero(n);
  c(0) = 1.0;
  return LinearProgram(std::move(A), std::move(b), std::move(c), 0.0,
                       lw_interior_point(p), p);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i is exact at every step; guard the product.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

LinearProgram chebyshev_lp(const LinearProgram& lp) {
  const int m = lp.m();
  const int n = lp.n();
  Matrix A = Matrix::Zero(m + 1, n + 1);
  Vector b = Vector::Zero(m + 1);
  Vector c = Vector::Zero(n + 1);
  A.topLeftCorner(m, n) = lp.A();
  A.block(0, n, m, 1) = lp.A().rowwise().norm();
  b.head(m) = lp.b();
  A(m, n) = -1.0;
  c(n) = -1.0;

  std::optional<Vector> witness;
  if (lp.interior_witness()) {
    const Vector s = slacks(lp, *lp.interior_witness());
    const Vector norms = lp.A().rowwise().norm();
    Real radius = std::numeric_limits<Real>::infinity();
    for (int i = 0; i < m; ++i) {
      if (norms(i) > 0) radius = std::min(radius, s(i) / norms(i));
    }
    Vector w(n + 1);
    w.head(n) = *lp.interior_witness();
    w(n) = 0.5 * radius;
    witness = std::move(w);
  }
  return LinearProgram(std::move(A), std::move(b), std::move(c), std::nullopt,
                       std::move(witness));
}

LinearProgram unit_interval() {
  Matrix A(2, 1);
  A << 1.0, -1.0;
  Vector b(2);
  b << 1.0, 0.0;
  Vector c(1);
  c << 1.0;
  Vector w(1);
  w << 0.5;
  return LinearProgram(std::move(A), std::move(b), std::move(c), 0.0,
                       std::move(w));
}

LinearProgram unit_square() {
  Matrix A(4, 2);
  A << 1, 0, 0, 1, -1, 0, 0, -1;
  Vector b(4);
  b << 1, 1, 0, 0;
  Vector c(2);
  c << 1, 0;
  Vector w(2);
  w << 0.5, 0.5;
  return LinearProgram(std::move(A), std::move(b), std::move(c), 0.0,
                       std::move(w));
}

}  // namespace ipmlab
