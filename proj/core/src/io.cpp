// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ipmlab::io {

using nlohmann::json;

std::string format_real(Real value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

json vector_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Vector vector_from(const json& arr, Eigen::Index expected, const char* name) {
  if (!arr.is_array()) {
    throw IoError(std::string("LP file: '") + name + "' must be an array");
  }
  if (static_cast<Eigen::Index>(arr.size()) != expected) {
    throw DimensionError(std::string("LP file: '") + name + "' has " +
                         std::to_string(arr.size()) + " entries, expected " +
                         std::to_string(expected));
  }
  Vector v(expected);
  for (Eigen::Index i = 0; i < expected; ++i) v(i) = arr[i].get<Real>();
  return v;
}

}  // namespace

std::string lp_to_json(const LinearProgram& lp) {
  json j;
  j["m"] = lp.m();
  j["n"] = lp.n();
  json a = json::array();
  for (int i = 0; i < lp.m(); ++i) {
    for (int k = 0; k < lp.n(); ++k) a.push_back(lp.A()(i, k));
  }
  j["A"] = std::move(a);
  j["b"] = vector_json(lp.b());
  j["c"] = vector_json(lp.c());
  if (lp.optimal_value()) j["optimal_value"] = *lp.optimal_value();
  if (lp.interior_witness()) {
    j["interior_witness"] = vector_json(*lp.interior_witness());
  }
  if (lp.lw_family()) {
    j["meta"] = {{"family", "LW"},
                 {"r", lp.lw_family()->r},
                 {"t", lp.lw_family()->t}};
  }
  return j.dump(2) + "\n";
}

LinearProgram lp_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("LP file: invalid JSON: ") + e.what());
  }
  try {
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    if (m < 1 || n < 1) throw DimensionError("LP file: m and n must be >= 1");
    const Vector flat = vector_from(j.at("A"), static_cast<Eigen::Index>(m) * n,
                                    "A");
    Matrix A(m, n);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < n; ++k) A(i, k) = flat(i * n + k);
    }
    Vector b = vector_from(j.at("b"), m, "b");
    Vector c = vector_from(j.at("c"), n, "c");
    std::optional<Real> opt;
    if (j.contains("optimal_value") && !j["optimal_value"].is_null()) {
      opt = j["optimal_value"].get<Real>();
    }
    std::optional<Vector> witness;
    if (j.contains("interior_witness") && !j["interior_witness"].is_null()) {
      witness = vector_from(j["interior_witness"], n, "interior_witness");
    }
    std::optional<LwParams> family;
    if (j.contains("meta") && j["meta"].is_object() &&
        j["meta"].value("family", std::string()) == "LW") {
      family = LwParams{j["meta"].at("r").get<int>(),
                        j["meta"].at("t").get<Real>()};
    }
    return LinearProgram(std::move(A), std::move(b), std::move(c), opt,
                         std::move(witness), family);
  } catch (const json::exception& e) {
    throw IoError(std::string("LP file: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw IoError("write to '" + path + "' failed");
}

void write_lp(const LinearProgram& lp, const std::string& path) {
  write_file(path, lp_to_json(lp));
}

LinearProgram read_lp(const std::string& path) {
  return lp_from_json(read_file(path));
}

void write_path_csv(std::ostream& os, const LinearProgram& lp,
                    const CentralPath& path) {
  os << "mu";
  for (int i = 1; i <= lp.n(); ++i) os << ",x_" << i;
  for (int i = 1; i <= lp.m(); ++i) os << ",s_" << i;
  os << ",gap,newton_decrement,iterations\n";
  for (const CenteringResult& p : path.points) {
    os << format_real(p.mu.value());
    for (Eigen::Index i = 0; i < p.x.size(); ++i) {
      os << ',' << format_real(p.x(i));
    }
    const Vector s = slacks(lp, p.x);
    for (Eigen::Index i = 0; i < s.size(); ++i) os << ',' << format_real(s(i));
    os << ',' << format_real(gap(lp, p.x)) << ','
       << format_real(p.newton_decrement) << ',' << p.iterations << '\n';
  }
}

void write_run_csv(std::ostream& os, const ShortStepRun& run) {
  os << "k,mu,lambda,gap";
  const Eigen::Index n =
      run.iterates.empty() ? 0 : run.iterates.front().x.size();
  for (Eigen::Index i = 1; i <= n; ++i) os << ",x_" << i;
  os << '\n';
  for (std::size_t k = 0; k < run.iterates.size(); ++k) {
    const ShortStepIterate& it = run.iterates[k];
    os << k << ',' << format_real(it.mu) << ',' << format_real(it.lambda)
       << ',' << format_real(it.gap);
    for (Eigen::Index i = 0; i < it.x.size(); ++i) {
      os << ',' << format_real(it.x(i));
    }
    os << '\n';
  }
}

namespace {

// JSON has no infinities; encode them as strings.
json real_json(Real v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

}  // namespace

std::string report_to_json(const std::vector<BoundCheck>& checks,
                           const ReportSummary& summary,
                           const std::vector<std::string>& notes) {
  json arr = json::array();
  for (const BoundCheck& c : checks) {
    arr.push_back({{"label", c.label},
                   {"lhs", real_json(c.lhs)},
                   {"rhs", real_json(c.rhs)},
                   {"margin", real_json(c.margin)},
                   {"satisfied", c.satisfied},
                   {"anchor", c.anchor}});
  }
  json j;
  j["checks"] = std::move(arr);
  j["summary"] = {{"total", summary.total},
                  {"failed", summary.failed},
                  {"precondition_failures", summary.precondition_failures}};
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace ipmlab::io
