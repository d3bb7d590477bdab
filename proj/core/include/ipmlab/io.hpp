// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ipmlab/centering.hpp"
#include "ipmlab/linear_program.hpp"
#include "ipmlab/neighborhood.hpp"
#include "ipmlab/short_step.hpp"

namespace ipmlab::io {

/// Shortest decimal string that round-trips the double (at most 17
/// significant digits).
std::string format_real(Real value);

/// LP interchange JSON: m, n, A (row-major), b, c and the optional
/// optimal_value, interior_witness, meta. LW instances carry
/// meta = {"family": "LW", "r": r, "t": t}.
std::string lp_to_json(const LinearProgram& lp);
LinearProgram lp_from_json(const std::string& text);

void write_lp(const LinearProgram& lp, const std::string& path);
LinearProgram read_lp(const std::string& path);

/// Columns mu, x_1..x_n, s_1..s_m, gap, newton_decrement, iterations.
void write_path_csv(std::ostream& os, const LinearProgram& lp,
                    const CentralPath& path);

/// Columns k, mu, lambda, gap, x_1..x_n.
void write_run_csv(std::ostream& os, const ShortStepRun& run);

struct ReportSummary {
  int total = 0;
  int failed = 0;
  int precondition_failures = 0;
};

/// {"checks": [{label, lhs, rhs, margin, satisfied, anchor}...],
///  "summary": {total, failed, precondition_failures}, "notes": [...]}.
std::string report_to_json(const std::vector<BoundCheck>& checks,
                           const ReportSummary& summary,
                           const std::vector<std::string>& notes = {});

/// Entire file as a string; throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ipmlab::io
