// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace ipmlab::cli {

/// Record of one invocation. Replaying `args` with a different output
/// directory must reproduce every listed output byte for byte.
class RunManifest {
 public:
  RunManifest(std::string command, std::vector<std::string> args);

  nlohmann::json& instance() { return instance_; }
  nlohmann::json& barrier() { return barrier_; }
  nlohmann::json& parameters() { return parameters_; }
  nlohmann::json& results() { return results_; }
  void set_seed(unsigned long long seed) { seed_ = seed; }

  /// Writes `contents` to out_dir/name and records its hash.
  void write_output(const std::string& out_dir, const std::string& name,
                    const std::string& contents);

  /// Writes out_dir/manifest.json.
  void finish(const std::string& out_dir, int exit_code);

 private:
  std::string command_;
  std::vector<std::string> args_;
  nlohmann::json instance_ = nlohmann::json::object();
  nlohmann::json barrier_ = nlohmann::json::object();
  nlohmann::json parameters_ = nlohmann::json::object();
  nlohmann::json results_ = nlohmann::json::object();
  nlohmann::json outputs_ = nlohmann::json::array();
  unsigned long long seed_ = 0;
  std::chrono::steady_clock::time_point start_;
  std::chrono::system_clock::time_point wall_start_;
};

}  // namespace ipmlab::cli
