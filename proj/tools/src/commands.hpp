// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace ipmlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNumerical = 2,
  kVerificationFailed = 3,
};

/// Parses and runs one command line (without the program name).
int run(const std::vector<std::string>& args);

}  // namespace ipmlab::cli
