// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace ipmlab {

/// Scalar profile. Every algorithm is written against this alias so a
/// higher-precision type can be swapped in without touching call sites.
using Real = double;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

enum class ErrorKind {
  kDimension,
  kDomain,
  kNotInterior,
  kFactorization,
  kConvergence,
  kPrecondition,
  kMissingData,
  kIo,
};

/// Base exception for the library. `kind()` lets front ends map failures to
/// stable exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::kDimension, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class NotInteriorError : public Error {
 public:
  explicit NotInteriorError(const std::string& what)
      : Error(ErrorKind::kNotInterior, what) {}
};

class FactorizationError : public Error {
 public:
  explicit FactorizationError(const std::string& what)
      : Error(ErrorKind::kFactorization, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::kConvergence, what) {}
};

/// A verifier was handed an input that does not satisfy the hypothesis of
/// the bound it checks. Distinct from a bound failing.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::kPrecondition, what) {}
};

class MissingDataError : public Error {
 public:
  explicit MissingDataError(const std::string& what)
      : Error(ErrorKind::kMissingData, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

}  // namespace ipmlab
