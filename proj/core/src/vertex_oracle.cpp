// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive basic-solution enumeration. Only meant for desk-scale
// instances; the guard keeps C(m, n) bounded.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "ipmlab/linear_program.hpp"

namespace ipmlab {

namespace {

// Advances `idx` (strictly increasing, values < m) to the next n-subset in
// lexicographic order. Returns false after the last subset.
bool next_subset(std::vector<int>& idx, int m) {
  const int n = static_cast<int>(idx.size());
  int i = n - 1;
  while (i >= 0 && idx[i] == m - n + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

Real min_value_oracle(const LinearProgram& lp, std::uint64_t guard) {
  const int m = lp.m();
  const int n = lp.n();
  if (n > m) {
    throw MissingDataError("min_value_oracle: fewer constraints than "
                           "variables, no vertex exists");
  }
  const std::uint64_t count = binomial(m, n);
  if (count > guard) {
    throw DomainError("min_value_oracle: C(" + std::to_string(m) + "," +
                      std::to_string(n) + ") = " + std::to_string(count) +
                      " exceeds guard " + std::to_string(guard));
  }

  const Real scale = 1.0 + lp.b().cwiseAbs().maxCoeff();
  const Real feas_tol = 1e-9 * scale;

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  Matrix basis(n, n);
  Vector rhs(n);
  Real best = std::numeric_limits<Real>::infinity();
  bool found = false;
  do {
    for (int i = 0; i < n; ++i) {
      basis.row(i) = lp.A().row(idx[i]);
      rhs(i) = lp.b()(idx[i]);
    }
    Eigen::FullPivLU<Matrix> lu(basis);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) continue;
    const Vector x = lu.solve(rhs);
    if (!x.allFinite()) continue;
    const Vector s = lp.b() - lp.A() * x;
    if (s.minCoeff() < -feas_tol) continue;
    best = std::min(best, lp.c().dot(x));
    found = true;
  } while (next_subset(idx, m));

  if (!found) {
    throw MissingDataError(
        "min_value_oracle: no feasible vertex (region empty or unbounded)");
  }
  return best;
}

}  // namespace ipmlab
