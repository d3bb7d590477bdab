// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ipmlab/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

namespace ipmlab {

Real max_valid_theta() { return (std::sqrt(69.0) - 3.0) / 10.0; }

Real beta(Real theta) {
  if (!(theta > 0 && theta < 1)) {
    throw DomainError("beta: theta must lie in (0, 1)");
  }
  const Real q = theta * theta / (1.0 - theta);
  return (q + std::sqrt(q * q + 9.0 * q)) / 3.0;
}

BoundCheck make_check(std::string label, Real lhs, Real rhs,
                      std::string anchor) {
  BoundCheck out;
  out.label = std::move(label);
  out.lhs = lhs;
  out.rhs = rhs;
  out.margin = rhs - lhs;
  out.satisfied =
      lhs <= rhs + kBoundRelTol * std::abs(rhs) + kBoundAbsTol;
  out.anchor = std::move(anchor);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct QuadraticForms {
  Real a = 0;  // c^T H^-1 c
  Real b = 0;  // c^T H^-1 g
  Real d = 0;  // g^T H^-1 g
};

QuadraticForms quadratic_forms(const LinearProgram& lp, const Barrier& bar,
                               const Vector& x) {
  const BarrierEval ev = eval_barrier_derivatives(lp, bar, x);
  const HessianFactor factor(ev.hessian);
  QuadraticForms q;
  const Vector lc = factor.solve(lp.c());
  q.a = lp.c().dot(lc);
  q.b = ev.gradient.dot(lc);
  q.d = factor.dual_inner(ev.gradient, ev.gradient);
  return q;
}

constexpr Real kInf = std::numeric_limits<Real>::infinity();

}  // namespace

L2Membership l2_membership(const LinearProgram& lp, const Barrier& bar,
                           const Vector& x, Real theta) {
  if (!(theta > 0 && theta < 1)) {
    throw DomainError("l2_membership: theta must lie in (0, 1)");
  }
  const QuadraticForms f = quadratic_forms(lp, bar, x);
  const Real q = f.d - theta * theta;
  const Real a = f.a;
  const Real b = f.b;
  L2Membership out;

  if (!(a > 0)) {
    // c = 0: the condition reads q mu^2 <= 0.
    if (q <= 0) out = {true, 0.0, kInf};
    return out;
  }
  if (q == 0) {
    if (b < 0) out = {true, a / (-2.0 * b), kInf};
    return out;
  }
  const Real disc = b * b - q * a;
  if (q < 0) {
    // One positive root; the condition holds to its right.
    const Real root = std::sqrt(disc);
    const Real lo = b > 0 ? (b + root) / (-q) : a / (root - b);
    out = {true, lo, kInf};
    return out;
  }
  // q > 0: both roots share the sign of -b.
  if (b >= 0 || disc < 0) return out;
  const Real root = std::sqrt(disc);
  const Real hi = (root - b) / q;
  const Real lo = a / (root - b);
  out = {true, lo, hi};
  return out;
}

Real representative_mu(const LinearProgram& lp, const Barrier& bar,
                       const Vector& x, const L2Membership& set) {
  if (!set.member) {
    throw DomainError("representative_mu: empty membership set");
  }
  if (set.unbounded()) {
    // Nudged inside so the decrement is strictly below theta; the left end
    // keeps the matching center away from the analytic center.
    return set.lo > 0 ? set.lo * (1.0 + 1e-9) : 1.0;
  }
  const QuadraticForms f = quadratic_forms(lp, bar, x);
  const Real mu = (f.a > 0 && f.b < 0) ? -f.a / f.b : set.lo;
  return std::clamp(mu, set.lo, set.hi);
}

// ---------------------------------------------------------------------------

PathSearcher::PathSearcher(const LinearProgram& lp, Barrier bar,
                           CenteringOptions options)
    : lp_(&lp), bar_(std::move(bar)), options_(options) {
  if (!lp.interior_witness()) {
    throw MissingDataError("PathSearcher: the LP has no interior witness");
  }
  analytic_center_ =
      ipmlab::analytic_center(lp, bar_, *lp.interior_witness(), options_).x;
  objective_sup_ = lp.c().dot(analytic_center_);
}

const Vector& PathSearcher::center_at(Real eta) {
  const Real key = std::log(eta);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Vector* start = &analytic_center_;
  Real best = kInf;
  auto it = cache_.lower_bound(key);
  if (it != cache_.end()) {
    best = it->first - key;
    start = &it->second;
  }
  if (it != cache_.begin()) {
    auto prev = std::prev(it);
    if (key - prev->first < best) start = &prev->second;
  }
  CenteringResult res = center(*lp_, bar_, Mu::finite(eta), *start, options_);
  return cache_.emplace(key, std::move(res.x)).first->second;
}

PathSearcher::Match PathSearcher::match_objective(Real target, Real hint,
                                                  Real rel_tol) {
  if (!(hint > 0) || !std::isfinite(hint)) {
    throw DomainError("match_objective: hint must be a positive real");
  }
  if (!(target < objective_sup_)) {
    throw DomainError("match_objective: target " + std::to_string(target) +
                      " is not below the path supremum " +
                      std::to_string(objective_sup_));
  }
  const auto& opt = lp_->optimal_value();
  if (opt && !(target > *opt)) {
    throw DomainError("match_objective: target is not above the optimum");
  }
  const Real scale =
      opt ? target - *opt : std::max<Real>(1.0, std::abs(target));
  const Real tol = rel_tol * scale;

  Match out;
  const auto f = [&](Real eta) {
    ++out.evaluations;
    return lp_->c().dot(center_at(eta));
  };
  const auto finish = [&](Real eta, Real value) {
    out.eta = eta;
    out.x = center_at(eta);
    out.objective = value;
    return out;
  };

  Real lo = hint, hi = hint;
  Real flo = f(lo), fhi = flo;
  constexpr int kMaxExpansions = 500;
  int expansions = 0;
  while (flo > target) {
    hi = lo;
    fhi = flo;
    lo *= 0.25;
    flo = f(lo);
    if (++expansions > kMaxExpansions) {
      throw DomainError("match_objective: lower bracket not found");
    }
  }
  while (fhi < target) {
    lo = hi;
    flo = fhi;
    hi *= 4.0;
    fhi = f(hi);
    if (++expansions > kMaxExpansions || !std::isfinite(hi)) {
      throw DomainError("match_objective: upper bracket not found");
    }
  }
  if (std::abs(flo - target) <= tol) return finish(lo, flo);
  if (std::abs(fhi - target) <= tol) return finish(hi, fhi);

  for (int iter = 0; iter < 200; ++iter) {
    const Real mid = std::sqrt(lo) * std::sqrt(hi);
    const Real fm = f(mid);
    if (std::abs(fm - target) <= tol) return finish(mid, fm);
    if (fm < target) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    if (hi / lo - 1.0 < 1e-15) break;
  }
  // Bracket exhausted at double resolution.
  return std::abs(flo - target) <= std::abs(fhi - target) ? finish(lo, flo)
                                                          : finish(hi, fhi);
}

std::string_view to_string(Lemma3Hypothesis h) {
  switch (h) {
    case Lemma3Hypothesis::kMet:
      return "met";
    case Lemma3Hypothesis::kUnmet:
      return "unmet";
    case Lemma3Hypothesis::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<Real> lemma3_gap_threshold(const LinearProgram& lp,
                                         std::optional<Real> inradius) {
  const Real m = static_cast<Real>(lp.m());
  std::optional<Real> rho = inradius;
  // A ball of radius t/2 fits only for r = 1; deeper LW members need the
  // computed inradius, which is slightly smaller.
  if (!rho && lp.lw_family() && lp.lw_family()->r == 1) {
    rho = lp.lw_family()->t / 2.0;
  }
  if (rho) return *rho * lp.c().norm() / (2.0 * m + 4.0 * std::sqrt(m));
  return std::nullopt;
}

EtaMatch match_eta(const LinearProgram& lp, PathSearcher& log_path,
                   Real gap_target, Real tol, std::optional<Real> inradius) {
  if (log_path.barrier().kind() != BarrierKind::kLog) {
    throw DomainError("match_eta: searcher must use the log barrier");
  }
  if (!lp.optimal_value()) {
    throw MissingDataError("match_eta: LP optimum is unknown");
  }
  const Real opt = *lp.optimal_value();
  const Real sup_gap = log_path.objective_sup() - opt;
  if (!(gap_target > 0) || !(gap_target < sup_gap)) {
    throw DomainError("match_eta: gap target " + std::to_string(gap_target) +
                      " outside the attainable range (0, " +
                      std::to_string(sup_gap) + ")");
  }
  const PathSearcher::Match m =
      log_path.match_objective(opt + gap_target, gap_target, tol);
  EtaMatch out;
  out.eta = m.eta;
  out.log_center = m.x;
  out.achieved_gap = m.objective - opt;
  out.evaluations = m.evaluations;
  if (const auto thr = lemma3_gap_threshold(lp, inradius)) {
    out.hypothesis =
        gap_target < *thr ? Lemma3Hypothesis::kMet : Lemma3Hypothesis::kUnmet;
  }
  return out;
}

EtaMatch match_eta(const LinearProgram& lp, Real gap_target, Real tol,
                   std::optional<Real> inradius) {
  PathSearcher log_path(lp, Barrier::logarithmic(lp.m()));
  return match_eta(lp, log_path, gap_target, tol, inradius);
}

// ---------------------------------------------------------------------------

WideCertificate certificate_from_log_center(const LinearProgram& lp,
                                            const Vector& x, Real eta,
                                            const Vector& log_center) {
  const Vector s_ln = slacks(lp, log_center);
  const Vector s = slacks(lp, x);
  if (!(s_ln.minCoeff() > 0) || !(s.minCoeff() > 0)) {
    throw NotInteriorError("certificate: points must be strictly interior");
  }
  WideCertificate out;
  out.eta = eta;
  out.y = eta * s_ln.cwiseInverse();
  const Vector products = out.y.cwiseProduct(s);
  const Real total = products.sum();
  const Real m = static_cast<Real>(lp.m());
  out.mu = total / m;
  out.min_product = products.minCoeff();
  out.theta_effective = 1.0 - m * out.min_product / total;
  out.dual_residual = (lp.A().transpose() * out.y + lp.c()).norm();
  return out;
}

WideCertificate wide_certificate(const LinearProgram& lp, const Vector& x,
                                 Real tol, std::optional<Real> gap_level) {
  const Real level = gap_level ? *gap_level : gap(lp, x);
  const EtaMatch match = match_eta(lp, level);
  WideCertificate cert =
      certificate_from_log_center(lp, x, match.eta, match.log_center);
  if (cert.dual_residual > tol * (1.0 + lp.c().norm())) {
    throw ConvergenceError("wide_certificate: dual residual " +
                           std::to_string(cert.dual_residual) +
                           " exceeds tolerance (log center too loose)");
  }
  return cert;
}

bool in_wide_neighborhood(const LinearProgram& lp, const Vector& x,
                          const WideCertificate& cert, Real theta,
                          Real dual_tol) {
  if (!is_interior(lp, x)) return false;
  if ((cert.y.array() < 0).any()) return false;
  if ((lp.A().transpose() * cert.y + lp.c()).norm() > dual_tol) return false;
  const Vector products = cert.y.cwiseProduct(slacks(lp, x));
  const Real m = static_cast<Real>(lp.m());
  const Real mu = products.sum() / m;
  return products.minCoeff() >= (1.0 - theta) * mu * (1.0 - 1e-12);
}

// ---------------------------------------------------------------------------

std::vector<BoundCheck> verify_thm_equivalence(const LinearProgram& lp,
                                               const Barrier& phi,
                                               const Barrier& psi, Real mu,
                                               Real tol) {
  PathSearcher phi_path(lp, phi);
  PathSearcher psi_path(lp, psi);
  const Vector x_phi = phi_path.center_at(mu);
  const Real target = lp.c().dot(x_phi);
  PathSearcher::Match match;
  try {
    match = psi_path.match_objective(target, mu, tol);
  } catch (const DomainError& e) {
    throw PreconditionError(std::string("thm1: bracket failure: ") + e.what());
  }

  const Vector s_phi = slacks(lp, x_phi);
  const Vector s_psi = slacks(lp, match.x);
  const Real lower = 1.0 / (1.0 + c_nu(phi.nu()));
  const Real upper = 1.0 + c_nu(psi.nu());
  std::vector<BoundCheck> out;
  out.reserve(2 * static_cast<std::size_t>(lp.m()));
  for (int i = 0; i < lp.m(); ++i) {
    const Real ratio = s_phi(i) / s_psi(i);
    const std::string row = "[" + std::to_string(i) + "]";
    out.push_back(make_check("thm1.lower" + row, lower, ratio, "thm1"));
    out.push_back(make_check("thm1.upper" + row, ratio, upper, "thm1"));
  }
  return out;
}

std::vector<BoundCheck> verify_thm_gap(const LinearProgram& lp,
                                       const Barrier& bar, Real mu, Real rho,
                                       Real tol) {
  if (!(rho > 0)) throw DomainError("verify_thm_gap: rho must be positive");
  if (!lp.interior_witness()) {
    throw MissingDataError("verify_thm_gap: the LP has no interior witness");
  }
  CenteringOptions opts;
  opts.tol = tol;
  opts.polish_steps = 2;
  const Vector x =
      center(lp, bar, Mu::finite(mu), *lp.interior_witness(), opts).x;
  const Real g = gap(lp, x);
  const Real nu = bar.nu();
  const Real floor =
      std::min(mu / 2.0, rho * lp.c().norm() / (2.0 * nu + 4.0 * std::sqrt(nu)));
  return {make_check("thm2.lower", floor, g, "thm2"),
          make_check("thm2.upper", g, mu * nu, "thm2")};
}

namespace {

Vector checked_center(const LinearProgram& lp, const Barrier& bar, Real mu,
                      const Vector& x, Real theta, const char* who) {
  if (!(theta > 0 && theta < max_valid_theta())) {
    throw PreconditionError(std::string(who) +
                            ": theta must lie in (0, (sqrt(69)-3)/10)");
  }
  const Real lambda = newton_decrement(lp, bar, x, Mu::finite(mu));
  if (!(lambda <= theta)) {
    throw PreconditionError(std::string(who) + ": x is not in N_theta(mu) "
                            "(decrement " + std::to_string(lambda) + ")");
  }
  CenteringOptions opts;
  opts.polish_steps = 2;
  return center(lp, bar, Mu::finite(mu), x, opts).x;
}

}  // namespace

std::vector<BoundCheck> verify_prop_slack(const LinearProgram& lp,
                                          const Barrier& bar, Real mu,
                                          const Vector& x, Real theta) {
  const Vector xc = checked_center(lp, bar, mu, x, theta, "prop1");
  const Real b = beta(theta);
  const Vector s = slacks(lp, x);
  const Vector sc = slacks(lp, xc);
  std::vector<BoundCheck> out;
  out.reserve(2 * static_cast<std::size_t>(lp.m()));
  for (int i = 0; i < lp.m(); ++i) {
    const Real ratio = s(i) / sc(i);
    const std::string row = "[" + std::to_string(i) + "]";
    out.push_back(make_check("prop1.lower" + row, 1.0 - b, ratio, "prop1"));
    out.push_back(make_check("prop1.upper" + row, ratio, 1.0 + b, "prop1"));
  }
  return out;
}

std::vector<BoundCheck> verify_prop_gap(const LinearProgram& lp,
                                        const Barrier& bar, Real mu,
                                        const Vector& x, Real theta) {
  const Vector xc = checked_center(lp, bar, mu, x, theta, "prop2");
  const Real b = beta(theta);
  const Real ratio = gap(lp, x) / gap(lp, xc);
  return {make_check("prop2.lower", 1.0 - b, ratio, "prop2"),
          make_check("prop2.upper", ratio, 1.0 + b, "prop2")};
}

Vector sample_l2_point(const LinearProgram& lp, const Barrier& bar, Real mu,
                       Real theta, std::uint64_t seed, const Vector& center) {
  if (!(theta > 0 && theta < 1)) {
    throw DomainError("sample_l2_point: theta must lie in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> normal(0.0, 1.0);
  std::uniform_real_distribution<Real> uniform(0.0, 1.0);

  Vector h(center.size());
  for (Eigen::Index i = 0; i < h.size(); ++i) h(i) = normal(rng);
  const Matrix H = eval_barrier_derivatives(lp, bar, center).hessian;
  const Real len = std::sqrt(h.dot(H * h));
  if (!(len > 0)) return center;
  h /= len;

  // Fraction of the unit Dikin radius in (0, 1).
  Real tau = 0.999 * (1.0 - uniform(rng));
  const Mu scale = Mu::finite(mu);
  for (int k = 0; k < 200; ++k) {
    const Vector x = center + tau * h;
    if (is_interior(lp, x) && newton_decrement(lp, bar, x, scale) <= theta) {
      return x;
    }
    tau *= 0.5;
  }
  return center;
}

Vector sample_l2_point(const LinearProgram& lp, const Barrier& bar, Real mu,
                       Real theta, std::uint64_t seed) {
  if (!lp.interior_witness()) {
    throw MissingDataError("sample_l2_point: the LP has no interior witness");
  }
  CenteringOptions opts;
  opts.polish_steps = 2;
  const Vector xc =
      center(lp, bar, Mu::finite(mu), *lp.interior_witness(), opts).x;
  return sample_l2_point(lp, bar, mu, theta, seed, xc);
}

// ---------------------------------------------------------------------------

Real corollary_omega_m(Real theta, Real nu, Real m) {
  if (!(theta > 0 && theta < max_valid_theta())) {
    throw DomainError("corollary_omega: theta must lie in (0, (sqrt(69)-3)/10)");
  }
  if (!(nu >= 1)) throw DomainError("corollary_omega: nu must be >= 1");
  if (!(m >= 1)) throw DomainError("corollary_omega: m must be >= 1");
  const Real b = beta(theta);
  return 1.0 - (1.0 - b) / ((1.0 + b) * (1.0 + c_nu(nu)) * (1.0 + c_nu(m)));
}

Real corollary_omega(Real theta, Real nu, int r) {
  if (r < 1) throw DomainError("corollary_omega: r must be >= 1");
  return corollary_omega_m(theta, nu, 3.0 * r + 1.0);
}

CorollaryThresholds corollary_thresholds(Real theta, Real nu, int r, Real t) {
  if (!(theta > 0 && theta < max_valid_theta())) {
    throw DomainError("corollary_thresholds: theta out of range");
  }
  if (!(nu >= 1)) throw DomainError("corollary_thresholds: nu must be >= 1");
  if (r < 1) throw DomainError("corollary_thresholds: r must be >= 1");
  if (!(t > 1)) throw DomainError("corollary_thresholds: t must be > 1");
  const Real b = beta(theta);
  const Real m = 3.0 * r + 1.0;
  const Real root_t = std::sqrt(t);
  CorollaryThresholds out;
  out.gap0_min = (1.0 + b) * m * (1.0 + c_nu(nu)) * root_t / (1.0 - b);
  out.gapK_max = (1.0 - b) / (2.0 * (1.0 + b) * (1.0 + c_nu(m)));
  out.simplified_gap0 = 320.0 * r * nu * root_t;
  out.simplified_gapK = 1.0 / (180.0 * r);
  out.gap0_dominated = out.gap0_min <= out.simplified_gap0;
  out.gapK_dominated = out.gapK_max >= out.simplified_gapK;
  return out;
}

Real theorem3_log10_threshold(int r, Real omega) {
  if (r < 1) throw DomainError("theorem3_log10_threshold: r must be >= 1");
  if (!(omega > 0 && omega < 1)) {
    throw DomainError("theorem3_log10_threshold: omega must lie in (0, 1)");
  }
  const Real rr = static_cast<Real>(r);
  const Real ln10 = std::numbers::ln10_v<Real>;
  // ln((10r - 2)!) = lgamma(10r - 1).
  const Real log10_factorial = std::lgamma(10.0 * rr - 1.0) / ln10;
  const Real log10_base = std::log10(2.0) + std::log10(5.0 * rr - 1.0) +
                          4.0 * std::log10(10.0 * rr - 1.0) +
                          8.0 * log10_factorial -
                          std::log1p(-omega) / ln10;
  return std::ldexp(log10_base, r + 2);
}

}  // namespace ipmlab
