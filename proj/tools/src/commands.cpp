// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ipmlab/barrier.hpp"
#include "ipmlab/centering.hpp"
#include "ipmlab/corollary_audit.hpp"
#include "ipmlab/experiment.hpp"
#include "ipmlab/io.hpp"
#include "ipmlab/linear_program.hpp"
#include "ipmlab/neighborhood.hpp"
#include "ipmlab/short_step.hpp"
#include "manifest.hpp"

namespace ipmlab::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20240901;

struct Common {
  std::string lp_path;
  std::string family = "lw";
  int r = 2;
  double t = 10.0;
  std::string barrier = "log";
  std::string weights;
  std::string out = ".";
  std::uint64_t seed = kDefaultSeed;
};

struct Grid {
  double mu_min = 1e-3;
  double mu_max = 1e3;
  int mu_count = 13;

  std::vector<Real> values() const {
    if (mu_count < 1 || !(mu_min > 0) || !(mu_max >= mu_min)) {
      throw DomainError("mu grid: need mu-count >= 1 and 0 < mu-min <= mu-max");
    }
    std::vector<Real> out;
    if (mu_count == 1) return {mu_min};
    const Real a = std::log10(mu_min);
    const Real b = std::log10(mu_max);
    for (int k = 0; k < mu_count; ++k) {
      out.push_back(std::pow(10.0, a + (b - a) * k / (mu_count - 1)));
    }
    return out;
  }
};

std::string real(Real v) { return io::format_real(v); }

Vector parse_list(const std::string& text) {
  std::vector<Real> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const Real v = std::stod(item, &used);
    if (used != item.size()) throw DomainError("bad number '" + item + "'");
    values.push_back(v);
  }
  Vector out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(i) = values[i];
  return out;
}

LinearProgram load_instance(const Common& c, RunManifest& m) {
  if (!c.lp_path.empty()) {
    const std::string text = io::read_file(c.lp_path);
    m.instance() = {{"source", "file"},
                    {"path", std::filesystem::absolute(c.lp_path).string()},
                    {"fnv1a", io::fnv1a_hex(text)}};
    LinearProgram lp = io::lp_from_json(text);
    if (lp.lw_family()) {
      m.instance()["family"] = "LW";
      m.instance()["r"] = lp.lw_family()->r;
      m.instance()["t"] = lp.lw_family()->t;
    }
    return lp;
  }
  if (c.family == "lw") {
    m.instance() = {{"source", "family"}, {"family", "LW"}, {"r", c.r},
                    {"t", c.t}};
    return generate_lw({c.r, c.t});
  }
  if (c.family == "box") {
    m.instance() = {{"source", "family"}, {"family", "box"}};
    return unit_interval();
  }
  if (c.family == "square") {
    m.instance() = {{"source", "family"}, {"family", "square"}};
    return unit_square();
  }
  throw DomainError("unknown family '" + c.family + "'");
}

Barrier weighted_for(const LinearProgram& lp, const Common& c) {
  if (c.weights.empty()) return Barrier::alternating(lp.m());
  Barrier bar = Barrier::weighted(parse_list(c.weights));
  if (bar.m() != lp.m()) {
    throw DimensionError("--weights has " + std::to_string(bar.m()) +
                         " entries, the LP has " + std::to_string(lp.m()) +
                         " rows");
  }
  return bar;
}

json barrier_json(const Barrier& bar) {
  json w = json::array();
  for (Eigen::Index i = 0; i < bar.weights().size(); ++i) {
    w.push_back(bar.weights()(i));
  }
  return {{"kind", bar.name()}, {"nu", bar.nu()}, {"weights", w}};
}

Barrier load_barrier(const LinearProgram& lp, const Common& c,
                     RunManifest& m) {
  Barrier bar = c.barrier == "weighted" ? weighted_for(lp, c)
                                        : Barrier::logarithmic(lp.m());
  m.barrier() = barrier_json(bar);
  return bar;
}

// ---------------------------------------------------------------------------
// Verification suites

struct Report {
  std::vector<BoundCheck> checks;
  std::vector<std::string> notes;
  int preconditions = 0;

  void add(const std::vector<BoundCheck>& more) {
    checks.insert(checks.end(), more.begin(), more.end());
  }
  void precondition(const std::string& what) {
    ++preconditions;
    notes.push_back("precondition: " + what);
  }
  void inapplicable(const std::string& what) {
    notes.push_back("not applicable: " + what);
  }
};

struct SuiteArgs {
  Grid grid;
  double theta = kDefaultTheta;
  double gamma = kDefaultGamma;
  int samples = 100;
  int draws = 100;
  int segment_samples = 9;
  double gap_decades = 4;
  double match_tol = kDefaultMatchTol;
};

void suite_thm1(const LinearProgram& lp, const Barrier& phi, const Common& c,
                const SuiteArgs& a, Report& rep) {
  const Barrier psi = phi.kind() == BarrierKind::kLog
                          ? weighted_for(lp, c)
                          : Barrier::logarithmic(lp.m());
  std::optional<PathSearcher> psi_path;
  for (Real mu : a.grid.values()) {
    try {
      rep.add(verify_thm_equivalence(lp, phi, psi, mu, a.match_tol));
    } catch (const PreconditionError& e) {
      // Objectives above the whole psi path have no matching eta; the
      // statement is void there rather than violated.
      if (!psi_path) psi_path.emplace(lp, psi);
      CenteringOptions opts;
      opts.polish_steps = 2;
      const Vector x =
          center(lp, phi, Mu::finite(mu), *lp.interior_witness(), opts).x;
      if (lp.c().dot(x) >= psi_path->objective_sup()) {
        rep.inapplicable("thm1 at mu=" + real(mu) +
                         ": objective above the " + psi.name() +
                         " path supremum");
      } else {
        rep.precondition("thm1 at mu=" + real(mu) + ": " + e.what());
      }
    }
  }
}

void suite_thm2(const LinearProgram& lp, const Barrier& bar,
                const SuiteArgs& a, Report& rep) {
  const Real rho = inradius(lp);
  rep.notes.push_back("thm2 inradius " + real(rho));
  for (Real mu : a.grid.values()) rep.add(verify_thm_gap(lp, bar, mu, rho));
}

void suite_prop(const LinearProgram& lp, const Barrier& bar, const Common& c,
                const SuiteArgs& a, bool slack, Report& rep) {
  std::uint64_t index = 0;
  for (Real mu : a.grid.values()) {
    CenteringOptions opts;
    opts.polish_steps = 2;
    const Vector xc = center(lp, bar, Mu::finite(mu),
                             *lp.interior_witness(), opts)
                          .x;
    for (int i = 0; i < a.samples; ++i, ++index) {
      const Vector x = sample_l2_point(lp, bar, mu, a.theta, c.seed + index, xc);
      try {
        rep.add(slack ? verify_prop_slack(lp, bar, mu, x, a.theta)
                      : verify_prop_gap(lp, bar, mu, x, a.theta));
      } catch (const PreconditionError& e) {
        rep.precondition(std::string(slack ? "prop1" : "prop2") +
                         " at mu=" + real(mu) + ": " + e.what());
      }
    }
  }
}

void suite_lemma3(const LinearProgram& lp, const Barrier& bar,
                  const SuiteArgs& a, Report& rep) {
  const Real rho = inradius(lp);
  const Real m = static_cast<Real>(lp.m());
  PathSearcher log_path(lp, Barrier::logarithmic(lp.m()));
  int unmet = 0;
  for (Real mu : a.grid.values()) {
    CenteringOptions opts;
    opts.polish_steps = 2;
    const Vector x =
        center(lp, bar, Mu::finite(mu), *lp.interior_witness(), opts).x;
    const Real g = gap(lp, x);
    EtaMatch match;
    try {
      match = match_eta(lp, log_path, g, a.match_tol, rho);
    } catch (const DomainError& e) {
      if (g >= gap(lp, log_path.analytic_center())) {
        rep.inapplicable("lemma3 at mu=" + real(mu) +
                         ": gap above the log path supremum");
      } else {
        rep.precondition("lemma3 at mu=" + real(mu) + ": " + e.what());
      }
      continue;
    }
    const std::string at = "[mu=" + real(mu) + "]";
    rep.checks.push_back(
        make_check("lemma3.upper" + at, g, m * match.eta, "lemma3"));
    if (match.hypothesis == Lemma3Hypothesis::kMet) {
      rep.checks.push_back(
          make_check("lemma3.lower" + at, match.eta / 2, g, "lemma3"));
    } else {
      ++unmet;
    }
  }
  if (unmet > 0) {
    rep.notes.push_back("lemma3 lower half not asserted at " +
                        std::to_string(unmet) +
                        " grid point(s) above the gap threshold");
  }
}

void suite_corollary(const LinearProgram& lp, const Barrier& bar,
                     const SuiteArgs& a, Report& rep) {
  const AnalyticStart start = analytic_start(lp, bar, a.theta);
  ShortStepOptions opts;
  opts.theta = a.theta;
  opts.gamma = a.gamma;
  const Real target = gap(lp, start.x0) * std::pow(10.0, -a.gap_decades);
  const ShortStepRun run =
      short_step(lp, bar, start.mu0, start.x0, target, opts);
  AuditOptions audit_opts;
  audit_opts.samples = a.segment_samples;
  audit_opts.match_tol = a.match_tol;
  const ChainAudit audit = audit_corollary_chain(run, lp, bar, audit_opts);
  rep.add(audit.checks);
  for (const auto& n : audit.notes) rep.notes.push_back("corollary: " + n);
  rep.notes.push_back("corollary run: K=" + std::to_string(run.steps()) +
                      " termination=" +
                      std::string(to_string(run.termination)));
  if (audit.membership_failures > 0) {
    rep.preconditions += audit.membership_failures;
    rep.notes.push_back("precondition: " +
                        std::to_string(audit.membership_failures) +
                        " sampled point(s) outside every N_theta(mu)");
  }
}

void suite_sc(const LinearProgram& lp, const Barrier& chosen, const Common& c,
              const SuiteArgs& a, Report& rep) {
  std::mt19937_64 rng(c.seed);
  std::normal_distribution<Real> normal;
  std::uniform_real_distribution<Real> unit(0.0, 1.0);
  const Barrier other = chosen.kind() == BarrierKind::kLog
                            ? weighted_for(lp, c)
                            : Barrier::logarithmic(lp.m());
  const Vector x0 = *lp.interior_witness();
  for (const Barrier& bar : {chosen, other}) {
    for (int i = 0; i < a.draws; ++i) {
      Vector h(lp.n());
      Vector d(lp.n());
      for (int k = 0; k < lp.n(); ++k) {
        h(k) = normal(rng);
        d(k) = normal(rng);
      }
      const Ellipsoid e = dikin_ellipsoid(lp, bar, x0);
      const Vector x =
          x0 + 0.9 * unit(rng) * (ellipsoid_boundary_point(e, d) - x0);
      const std::string at = "." + bar.name() + "[" + std::to_string(i) + "]";
      const ScCheck sc = check_sc_inequality(lp, bar, x, h);
      BoundCheck b = make_check("sc" + at, sc.lhs, sc.rhs, "sc");
      b.satisfied = sc.satisfied;
      rep.checks.push_back(b);
      const InequalityCheck nu = check_nu_sc(lp, bar, x, h);
      BoundCheck bn = make_check("nu_sc" + at, nu.lhs, nu.rhs, "nu_sc");
      bn.satisfied = nu.satisfied;
      rep.checks.push_back(bn);
    }
  }
}

// ---------------------------------------------------------------------------
// Commands

int finish(RunManifest& m, const Common& c, int code) {
  m.finish(c.out, code);
  return code;
}

int cmd_lw_gen(const Common& c, RunManifest& m) {
  const LinearProgram lp = generate_lw({c.r, c.t});
  m.instance() = {{"source", "family"}, {"family", "LW"}, {"r", c.r},
                  {"t", c.t}};
  m.write_output(c.out, "lp.json", io::lp_to_json(lp));
  m.results() = {{"m", lp.m()}, {"n", lp.n()}};
  std::cout << "wrote LW_" << c.r << "(" << real(c.t) << "): " << lp.m()
            << " x " << lp.n() << "\n";
  return finish(m, c, kOk);
}

int cmd_center(const Common& c, const std::string& mu_text, double tol,
               RunManifest& m) {
  const LinearProgram lp = load_instance(c, m);
  const Barrier bar = load_barrier(lp, c, m);
  const Mu mu =
      mu_text == "inf" ? Mu::infinite() : Mu::finite(std::stod(mu_text));
  m.parameters() = {{"mu", mu_text}, {"tol", tol}};
  if (!lp.interior_witness()) {
    throw MissingDataError("center: the LP has no interior witness");
  }
  CenteringOptions opts;
  opts.tol = tol;
  CentralPath path{{center(lp, bar, mu, *lp.interior_witness(), opts)}, bar};
  std::ostringstream os;
  if (mu.is_infinite()) {
    // One row; the mu column shows "inf".
    const CenteringResult& r = path.points.front();
    os << "mu";
    for (int j = 0; j < lp.n(); ++j) os << ",x_" << j + 1;
    os << ",newton_decrement,iterations\ninf";
    for (int j = 0; j < lp.n(); ++j) os << ',' << real(r.x(j));
    os << ',' << real(r.newton_decrement) << ',' << r.iterations << '\n';
  } else {
    io::write_path_csv(os, lp, path);
  }
  m.write_output(c.out, "center.csv", os.str());
  const CenteringResult& r = path.points.front();
  m.results() = {{"newton_decrement", r.newton_decrement},
                 {"iterations", r.iterations}};
  return finish(m, c, kOk);
}

int cmd_trace(const Common& c, double mu_hi, double mu_lo, double shrink,
              double tol, RunManifest& m) {
  const LinearProgram lp = load_instance(c, m);
  const Barrier bar = load_barrier(lp, c, m);
  m.parameters() = {{"mu_hi", mu_hi}, {"mu_lo", mu_lo}, {"shrink", shrink},
                    {"tol", tol}};
  CenteringOptions opts;
  opts.tol = tol;
  const CentralPath path = trace_path(lp, bar, mu_hi, mu_lo, shrink, opts);
  std::ostringstream os;
  io::write_path_csv(os, lp, path);
  m.write_output(c.out, "trace.csv", os.str());
  const bool monotone = !lp.optimal_value() || path.gap_monotone(lp);
  m.results() = {{"points", path.points.size()}, {"gap_monotone", monotone}};
  return finish(m, c, monotone ? kOk : kVerificationFailed);
}

int cmd_solve(const Common& c, double tol, bool oracle, RunManifest& m) {
  const LinearProgram lp = load_instance(c, m);
  m.barrier() = barrier_json(Barrier::logarithmic(lp.m()));
  m.parameters() = {{"tol", tol}, {"oracle", oracle}};
  const LpSolution sol = solve_lp(lp, tol);
  json out = {{"value", sol.value},
              {"final_mu", sol.final_mu},
              {"newton_iterations", sol.newton_iterations}};
  json x = json::array();
  for (int j = 0; j < lp.n(); ++j) x.push_back(sol.x(j));
  out["x"] = x;
  if (oracle) {
    const Real v = min_value_oracle(lp);
    out["oracle_value"] = v;
    out["difference"] = std::abs(v - sol.value);
  }
  m.write_output(c.out, "solve.json", out.dump(2) + "\n");
  m.results() = {{"value", sol.value}};
  std::cout << "optimal value " << real(sol.value) << "\n";
  return finish(m, c, kOk);
}

int cmd_shortstep(const Common& c, double theta, double gamma,
                  double gap_target, std::optional<double> mu0, int cap,
                  RunManifest& m) {
  const LinearProgram lp = load_instance(c, m);
  const Barrier bar = load_barrier(lp, c, m);
  AnalyticStart start = analytic_start(lp, bar, theta);
  if (mu0) start.mu0 = *mu0;
  m.parameters() = {{"theta", theta}, {"gamma", gamma},
                    {"gap_target", gap_target}, {"mu0", start.mu0},
                    {"cap", cap}};
  ShortStepOptions opts;
  opts.theta = theta;
  opts.gamma = gamma;
  opts.cap = cap;
  const ShortStepRun run =
      short_step(lp, bar, start.mu0, start.x0, gap_target, opts);
  std::ostringstream os;
  io::write_run_csv(os, run);
  m.write_output(c.out, "run.csv", os.str());
  const Real muK = run.iterates.back().mu;
  m.results() = {{"K", run.steps()},
                 {"predicted", predicted_iterations(bar.nu(), gamma,
                                                    start.mu0, muK)},
                 {"termination", std::string(to_string(run.termination))},
                 {"safeguard_halvings", run.safeguard_halvings},
                 {"gap_final", run.iterates.back().gap}};
  std::cout << "K=" << run.steps() << " " << to_string(run.termination)
            << "\n";
  return finish(m, c,
                run.termination == Termination::kSafeguardFailure ? kNumerical
                                                                  : kOk);
}

int cmd_verify(const Common& c, const std::string& suite, const SuiteArgs& a,
               RunManifest& m) {
  const LinearProgram base = load_instance(c, m);
  LinearProgram lp = base;
  if (!base.optimal_value()) {
    try {
      lp = base.with_optimal_value(min_value_oracle(base));
      m.instance()["optimal_value_from"] = "vertex_enumeration";
    } catch (const DomainError&) {
      lp = base.with_optimal_value(solve_lp(base, 1e-10).value);
      m.instance()["optimal_value_from"] = "solve_lp";
    }
  }
  const Barrier bar = load_barrier(lp, c, m);
  m.parameters() = {{"suite", suite},
                    {"mu_min", a.grid.mu_min},
                    {"mu_max", a.grid.mu_max},
                    {"mu_count", a.grid.mu_count},
                    {"theta", a.theta},
                    {"gamma", a.gamma},
                    {"samples", a.samples},
                    {"draws", a.draws},
                    {"segment_samples", a.segment_samples},
                    {"gap_decades", a.gap_decades},
                    {"match_tol", a.match_tol}};
  Report rep;
  const bool all = suite == "all";
  if (all || suite == "thm1") suite_thm1(lp, bar, c, a, rep);
  if (all || suite == "thm2") suite_thm2(lp, bar, a, rep);
  if (all || suite == "prop1") suite_prop(lp, bar, c, a, true, rep);
  if (all || suite == "prop2") suite_prop(lp, bar, c, a, false, rep);
  if (all || suite == "lemma3") suite_lemma3(lp, bar, a, rep);
  if (all || suite == "corollary") suite_corollary(lp, bar, a, rep);
  if (all || suite == "sc") suite_sc(lp, bar, c, a, rep);

  io::ReportSummary summary;
  summary.total = static_cast<int>(rep.checks.size());
  summary.failed = static_cast<int>(
      std::count_if(rep.checks.begin(), rep.checks.end(),
                    [](const BoundCheck& b) { return !b.satisfied; }));
  summary.precondition_failures = rep.preconditions;
  m.write_output(c.out, "report.json",
                 io::report_to_json(rep.checks, summary, rep.notes));
  m.results() = {{"total", summary.total},
                 {"failed", summary.failed},
                 {"precondition_failures", summary.precondition_failures}};
  std::cout << suite << ": " << summary.total << " checks, " << summary.failed
            << " failed, " << summary.precondition_failures
            << " precondition failures\n";
  const bool pass = summary.failed == 0 && summary.precondition_failures == 0;
  return finish(m, c, pass ? kOk : kVerificationFailed);
}

int cmd_scaling(const Common& c, const std::string& r_list,
                const ScalingOptions& opts, RunManifest& m) {
  std::vector<int> rs;
  for (Real v : parse_list(r_list)) {
    if (v != std::floor(v) || v < 1 || v > 6) {
      throw DomainError("--r-list entries must be integers in [1, 6]");
    }
    rs.push_back(static_cast<int>(v));
  }
  m.instance() = {{"source", "family"}, {"family", "LW"}, {"r_list", rs},
                  {"t", c.t}};
  m.barrier() = {{"kind", opts.weighted_barrier ? "weighted-log" : "log"}};
  m.parameters() = {{"theta", opts.theta},
                    {"gamma", opts.gamma},
                    {"gap_decades", opts.gap_decades},
                    {"audit", opts.audit},
                    {"audit_samples", opts.audit_samples}};
  std::ostringstream os;
  os << "r,t,nu,K,predicted,within_band,mu0,muK,gap0,gapK,"
        "safeguard_halvings,termination,audit_checks,audit_failed,"
        "audit_membership_failures,omega,theorem3_log10_t,log10_t\n";
  bool pass = true;
  for (int r : rs) {
    const ScalingRow row = run_scaling_cell(r, c.t, opts);
    const bool ok = row.within_band() &&
                    row.termination == Termination::kGapTargetReached &&
                    (!row.audited || (row.audit_failed == 0 &&
                                      row.audit_membership_failures == 0));
    pass = pass && ok;
    os << row.r << ',' << real(row.t) << ',' << real(row.nu) << ',' << row.K
       << ',' << row.predicted << ',' << (row.within_band() ? 1 : 0) << ','
       << real(row.mu0) << ',' << real(row.muK) << ',' << real(row.gap0)
       << ',' << real(row.gapK) << ',' << row.safeguard_halvings << ','
       << to_string(row.termination) << ',' << row.audit_checks << ','
       << row.audit_failed << ',' << row.audit_membership_failures << ','
       << real(row.omega) << ',' << real(row.theorem3_log10_t) << ','
       << real(row.log10_t) << '\n';
    std::cout << "r=" << r << " K=" << row.K << " predicted=" << row.predicted
              << (ok ? "" : "  FAILED") << "\n";
  }
  m.write_output(c.out, "scaling.csv", os.str());
  m.results() = {{"pass", pass}};
  return finish(m, c, pass ? kOk : kVerificationFailed);
}

int cmd_replay(const std::string& manifest_path, const std::string& out) {
  const json recorded = json::parse(io::read_file(manifest_path));
  std::vector<std::string> args = recorded.at("args");
  args.push_back("--out");
  args.push_back(out);
  const int code = run(args);
  int mismatches = 0;
  for (const auto& entry : recorded.at("outputs")) {
    const std::string name = entry.at("file");
    const std::string path = (std::filesystem::path(out) / name).string();
    std::string hash = "missing";
    if (std::filesystem::exists(path)) hash = io::fnv1a_hex(io::read_file(path));
    const bool same = hash == entry.at("fnv1a").get<std::string>();
    if (!same) ++mismatches;
    std::cout << (same ? "identical " : "DIFFERS   ") << name << "\n";
  }
  if (code != recorded.at("exit_code").get<int>()) {
    std::cout << "exit code " << code << " differs from recorded "
              << recorded.at("exit_code").get<int>() << "\n";
    ++mismatches;
  }
  return mismatches == 0 ? kOk : kVerificationFailed;
}

void add_common(CLI::App* sub, Common& c, bool instance = true) {
  if (instance) {
    sub->add_option("--lp", c.lp_path, "LP interchange JSON file");
    sub->add_option("--family", c.family, "Built-in instance: lw, box, square")
        ->check(CLI::IsMember({"lw", "box", "square"}));
    sub->add_option("--r", c.r, "LW depth r")->check(CLI::PositiveNumber);
    sub->add_option("--t", c.t, "LW parameter t > 1");
    sub->add_option("--barrier", c.barrier, "log or weighted")
        ->check(CLI::IsMember({"log", "weighted"}));
    sub->add_option("--weights", c.weights,
                    "Comma-separated weights >= 1 (default 2,1,2,1,...)");
  }
  sub->add_option("--out", c.out, "Output directory")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->add_option("--seed", c.seed, "Random seed");
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Path-following interior-point laboratory", "ipmlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", IPMLAB_VERSION);

  Common c;
  SuiteArgs suite_args;
  std::string mu_text = "1";
  double tol = kVerificationCenteringTol;
  double solve_tol = 1e-6;
  bool oracle = false;
  double mu_hi = 10, mu_lo = 1e-6, shrink = 0.8;
  double theta = kDefaultTheta, gamma = kDefaultGamma, gap_target = 1e-4;
  std::optional<double> mu0;
  int cap = 100000;
  std::string suite;
  std::string r_list = "2,3,4";
  ScalingOptions scaling;
  std::string manifest_path;

  auto* lw_gen = app.add_subcommand("lw-gen", "Write LW_r(t) as LP JSON");
  lw_gen->add_option("--r", c.r, "Depth r >= 1")->required();
  lw_gen->add_option("--t", c.t, "Parameter t > 1")->required();
  add_common(lw_gen, c, false);

  auto* center_cmd = app.add_subcommand("center", "Center at one mu");
  add_common(center_cmd, c);
  center_cmd->add_option("--mu", mu_text, "mu > 0 or inf");
  center_cmd->add_option("--tol", tol, "Newton decrement tolerance");

  auto* trace = app.add_subcommand("trace", "Trace the central path");
  add_common(trace, c);
  trace->add_option("--mu-hi", mu_hi);
  trace->add_option("--mu-lo", mu_lo);
  trace->add_option("--shrink", shrink);
  trace->add_option("--tol", tol);

  auto* solve = app.add_subcommand("solve", "Path-following LP solve");
  add_common(solve, c);
  solve->add_option("--tol", solve_tol, "Stop when mu m <= tol");
  solve->add_flag("--oracle", oracle, "Also run vertex enumeration");

  auto* shortstep = app.add_subcommand("shortstep", "Short-step run");
  add_common(shortstep, c);
  shortstep->add_option("--theta", theta);
  shortstep->add_option("--gamma", gamma);
  shortstep->add_option("--gap-target", gap_target);
  shortstep->add_option("--mu0", mu0, "Start mu (default: analytic start)");
  shortstep->add_option("--cap", cap, "Iteration cap");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, c);
  verify->add_option("suite", suite, "thm1 thm2 prop1 prop2 lemma3 corollary sc all")
      ->required()
      ->check(CLI::IsMember(
          {"thm1", "thm2", "prop1", "prop2", "lemma3", "corollary", "sc", "all"}));
  verify->add_option("--mu-min", suite_args.grid.mu_min);
  verify->add_option("--mu-max", suite_args.grid.mu_max);
  verify->add_option("--mu-count", suite_args.grid.mu_count);
  verify->add_option("--theta", suite_args.theta);
  verify->add_option("--gamma", suite_args.gamma);
  verify->add_option("--samples", suite_args.samples, "Points per mu (prop1/2)");
  verify->add_option("--draws", suite_args.draws, "Draws per barrier (sc)");
  verify->add_option("--segment-samples", suite_args.segment_samples);
  verify->add_option("--gap-decades", suite_args.gap_decades);
  verify->add_option("--match-tol", suite_args.match_tol);

  auto* experiment = app.add_subcommand("experiment", "Experiments");
  experiment->require_subcommand(1);
  auto* scaling_cmd = experiment->add_subcommand("scaling", "Iteration counts");
  add_common(scaling_cmd, c, false);
  scaling_cmd->add_option("--r-list", r_list, "Comma-separated r values");
  scaling_cmd->add_option("--t", c.t);
  scaling_cmd->add_option("--theta", scaling.theta);
  scaling_cmd->add_option("--gamma", scaling.gamma);
  scaling_cmd->add_option("--gap-decades", scaling.gap_decades);
  scaling_cmd->add_flag("--weighted", scaling.weighted_barrier);
  scaling_cmd->add_option("--samples", scaling.audit_samples);
  bool no_audit = false;
  scaling_cmd->add_flag("--no-audit", no_audit);

  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare");
  replay->add_option("manifest", manifest_path)->required();
  replay->add_option("--out", c.out, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  if (scaling_cmd->parsed()) command = "experiment scaling";
  RunManifest manifest(command, args);
  manifest.set_seed(c.seed);

  try {
    if (lw_gen->parsed()) {
      if (c.r < 1 || !(c.t > 1) || !std::isfinite(c.t)) {
        std::cerr << "lw-gen: need r >= 1 and finite t > 1\n";
        return kUsage;
      }
      return cmd_lw_gen(c, manifest);
    }
    if (center_cmd->parsed()) return cmd_center(c, mu_text, tol, manifest);
    if (trace->parsed()) {
      return cmd_trace(c, mu_hi, mu_lo, shrink, tol, manifest);
    }
    if (solve->parsed()) return cmd_solve(c, solve_tol, oracle, manifest);
    if (shortstep->parsed()) {
      return cmd_shortstep(c, theta, gamma, gap_target, mu0, cap, manifest);
    }
    if (verify->parsed()) return cmd_verify(c, suite, suite_args, manifest);
    if (scaling_cmd->parsed()) {
      scaling.audit = !no_audit;
      return cmd_scaling(c, r_list, scaling, manifest);
    }
    if (replay->parsed()) return cmd_replay(manifest_path, c.out);
  } catch (const ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const FactorizationError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const NotInteriorError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const PreconditionError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ipmlab::cli
