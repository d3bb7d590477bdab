// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "manifest.hpp"

#include <ctime>
#include <filesystem>
#include <utility>

#include "ipmlab/io.hpp"

namespace ipmlab::cli {

namespace {

std::string utc_timestamp(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string shell_join(const std::vector<std::string>& args) {
  std::string out = "ipmlab";
  for (const auto& a : args) {
    out += ' ';
    if (a.find_first_of(" \t'\"") == std::string::npos && !a.empty()) {
      out += a;
    } else {
      out += '\'';
      for (char c : a) {
        if (c == '\'') {
          out += "'\\''";
        } else {
          out += c;
        }
      }
      out += '\'';
    }
  }
  return out;
}

}  // namespace

RunManifest::RunManifest(std::string command, std::vector<std::string> args)
    : command_(std::move(command)),
      args_(std::move(args)),
      start_(std::chrono::steady_clock::now()),
      wall_start_(std::chrono::system_clock::now()) {}

void RunManifest::write_output(const std::string& out_dir,
                               const std::string& name,
                               const std::string& contents) {
  std::filesystem::create_directories(out_dir);
  io::write_file((std::filesystem::path(out_dir) / name).string(), contents);
  outputs_.push_back({{"file", name}, {"fnv1a", io::fnv1a_hex(contents)},
                      {"bytes", contents.size()}});
}

void RunManifest::finish(const std::string& out_dir, int exit_code) {
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
          .count();
  nlohmann::json j;
  j["tool"] = "ipmlab";
  j["version"] = IPMLAB_VERSION;
  j["command"] = command_;
  j["command_line"] = shell_join(args_);
  j["args"] = args_;
  j["instance"] = instance_;
  j["barrier"] = barrier_;
  j["parameters"] = parameters_;
  j["seed"] = seed_;
  j["started_at"] = utc_timestamp(wall_start_);
  j["wall_clock_seconds"] = seconds;
  j["exit_code"] = exit_code;
  j["results"] = results_;
  j["outputs"] = outputs_;
  std::filesystem::create_directories(out_dir);
  io::write_file((std::filesystem::path(out_dir) / "manifest.json").string(),
                 j.dump(2) + "\n");
}

}  // namespace ipmlab::cli
