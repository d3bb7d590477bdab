// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ipmlab/types.hpp"

namespace ipmlab {

/// Parameters of the long-and-winding family LW_r(t).
struct LwParams {
  int r = 1;
  Real t = 2.0;

  int variables() const { return 2 * r; }
  int constraints() const { return 3 * r + 1; }
};

/// Inequality-form LP: minimize c^T x subject to A x <= b.
///
/// Immutable once constructed. The constructor validates shapes and, when an
/// interior witness is supplied, that it is strictly feasible.
class LinearProgram {
 public:
  LinearProgram(Matrix A, Vector b, Vector c,
                std::optional<Real> optimal_value = std::nullopt,
                std::optional<Vector> interior_witness = std::nullopt,
                std::optional<LwParams> family = std::nullopt);

  int m() const { return static_cast<int>(A_.rows()); }
  int n() const { return static_cast<int>(A_.cols()); }
  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  const Vector& c() const { return c_; }
  const std::optional<Real>& optimal_value() const { return optimal_value_; }
  const std::optional<Vector>& interior_witness() const { return witness_; }
  /// Set when the instance was produced by generate_lw.
  const std::optional<LwParams>& lw_family() const { return family_; }

  LinearProgram with_optimal_value(Real value) const;
  LinearProgram with_interior_witness(Vector witness) const;

 private:
  Matrix A_;
  Vector b_;
  Vector c_;
  std::optional<Real> optimal_value_;
  std::optional<Vector> witness_;
  std::optional<LwParams> family_;
};

/// s = b - A x.
Vector slacks(const LinearProgram& lp, const Vector& x);

/// True iff every slack is strictly positive.
bool is_interior(const LinearProgram& lp, const Vector& x);

/// c^T x minus the stored optimal value. Throws MissingDataError when the
/// optimum is unknown.
Real gap(const LinearProgram& lp, const Vector& x);

/// Builds LW_r(t) with the fixed row order
///   x1 <= t^2, x2 <= t,
///   for j = 1..r-1: x_{2j+1} <= t x_{2j-1}, x_{2j+1} <= t x_{2j},
///                   x_{2j+2} <= t^{1-1/2^j} (x_{2j-1} + x_{2j}),
///   -x_{2r-1} <= 0, -x_{2r} <= 0,
/// objective x1 and known optimum 0.
LinearProgram generate_lw(const LwParams& p);

/// t^{1 - 2^{-j}}, evaluated as exp((1 - 2^{-j}) ln t).
Real lw_coupling_coefficient(Real t, int j);

/// The halving point x_{2j-1} = x_{2j} = 2^{-j}; strictly feasible for every
/// t > 1.
Vector lw_interior_point(const LwParams& p);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

inline constexpr std::uint64_t kDefaultOracleGuard = 1'000'000;

/// Brute-force optimum: minimum objective over all feasible basic solutions.
/// Singular bases are skipped. Throws DomainError when C(m,n) exceeds
/// `guard` and MissingDataError when no feasible vertex exists.
Real min_value_oracle(const LinearProgram& lp,
                      std::uint64_t guard = kDefaultOracleGuard);

/// Variables (x, rho); minimize -rho s.t. a_i^T x + rho ||a_i||_2 <= b_i and
/// rho >= 0. The optimum is minus the inradius. If the source LP carries an
/// interior witness, the result carries (witness, half its largest safe ball).
LinearProgram chebyshev_lp(const LinearProgram& lp);

/// 1-D box 0 <= x <= 1 as rows {x <= 1, -x <= 0}, objective min x.
LinearProgram unit_interval();

/// [0,1]^2 with objective min x1.
LinearProgram unit_square();

}  // namespace ipmlab
