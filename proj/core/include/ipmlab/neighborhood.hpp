// Copyright 2026 The ipmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipmlab/barrier.hpp"
#include "ipmlab/centering.hpp"
#include "ipmlab/linear_program.hpp"

namespace ipmlab {

/// (sqrt(69) - 3) / 10: the largest theta for which beta(theta) < 1.
Real max_valid_theta();

/// Radius bound beta_theta on ||x - x(mu)||_{x(mu)} for x in N_theta(mu):
/// (1/3) (q + sqrt(q^2 + 9 q)) with q = theta^2 / (1 - theta).
Real beta(Real theta);

// ---------------------------------------------------------------------------
// Bound checks

inline constexpr Real kBoundRelTol = 1e-8;
inline constexpr Real kBoundAbsTol = 1e-10;

/// One inequality lhs <= rhs. Passes iff lhs <= rhs + 1e-8 |rhs| + 1e-10.
struct BoundCheck {
  std::string label;
  Real lhs = 0;
  Real rhs = 0;
  bool satisfied = false;
  Real margin = 0;
  std::string anchor;
};

BoundCheck make_check(std::string label, Real lhs, Real rhs,
                      std::string anchor);

// ---------------------------------------------------------------------------
// l2 neighborhood

/// Set of mu > 0 with ||c + mu grad phi(x)||_x^* <= theta mu: empty, a closed
/// interval, or a half-line [lo, inf).
struct L2Membership {
  bool member = false;
  Real lo = 0;
  Real hi = 0;

  bool unbounded() const {
    return hi == std::numeric_limits<Real>::infinity();
  }
  bool contains(Real mu) const { return member && mu >= lo && mu <= hi; }
};

/// Solves (d - theta^2) mu^2 + 2 b mu + a <= 0 in closed form, where
/// a = c^T H^{-1} c, b = c^T H^{-1} g, d = g^T H^{-1} g at x.
L2Membership l2_membership(const LinearProgram& lp, const Barrier& bar,
                           const Vector& x, Real theta);

/// A mu in the membership set: the decrement minimizer for a bounded
/// interval, the (nudged) left end for a half-line.
Real representative_mu(const LinearProgram& lp, const Barrier& bar,
                       const Vector& x, const L2Membership& set);

// ---------------------------------------------------------------------------
// Path-parameter search

/// Caches centers along one barrier's central path so repeated matching
/// queries warm-start from nearby parameters.
class PathSearcher {
 public:
  PathSearcher(const LinearProgram& lp, Barrier bar,
               CenteringOptions options = default_options());

  static CenteringOptions default_options() {
    CenteringOptions o;
    o.tol = kVerificationCenteringTol;
    o.polish_steps = 2;
    return o;
  }

  const Barrier& barrier() const { return bar_; }
  const Vector& analytic_center() const { return analytic_center_; }
  /// c^T x(inf), the supremum of the objective along the path.
  Real objective_sup() const { return objective_sup_; }

  /// x(eta), warm-started from the cached center nearest in log(eta).
  const Vector& center_at(Real eta);

  struct Match {
    Real eta = 0;
    Vector x;
    Real objective = 0;
    int evaluations = 0;
  };

  /// eta with c^T x(eta) = target, by geometric bracket expansion from
  /// `hint` followed by bisection in log(eta). Stops when the objective
  /// error is at most rel_tol * scale, where scale is the gap of the target
  /// when the LP optimum is known and max(1, |target|) otherwise.
  /// Throws DomainError when the target is not attained on the path.
  Match match_objective(Real target, Real hint, Real rel_tol);

 private:
  const LinearProgram* lp_;
  Barrier bar_;
  CenteringOptions options_;
  Vector analytic_center_;
  Real objective_sup_ = 0;
  std::map<Real, Vector> cache_;
};

enum class Lemma3Hypothesis { kMet, kUnmet, kUnknown };

std::string_view to_string(Lemma3Hypothesis h);

/// Largest gap at which eta/2 <= gap is guaranteed:
/// rho ||c|| / (2m + 4 sqrt(m)) for the supplied inradius rho. Without one,
/// LW_1(t) uses rho = t/2 and every other LP has no threshold.
std::optional<Real> lemma3_gap_threshold(const LinearProgram& lp,
                                         std::optional<Real> inradius);

struct EtaMatch {
  Real eta = 0;
  Vector log_center;
  Real achieved_gap = 0;
  Lemma3Hypothesis hypothesis = Lemma3Hypothesis::kUnknown;
  int evaluations = 0;
};

inline constexpr Real kDefaultMatchTol = 1e-10;

/// eta > 0 with gap(x_ln(eta)) = gap_target on the log-barrier path, by
/// bisection. `tol` is relative to gap_target. Throws DomainError when the
/// target lies outside (0, gap(x_ln(inf))).
EtaMatch match_eta(const LinearProgram& lp, Real gap_target,
                   Real tol = kDefaultMatchTol,
                   std::optional<Real> inradius = std::nullopt);

/// Same, reusing a searcher built on the log barrier of `lp`.
EtaMatch match_eta(const LinearProgram& lp, PathSearcher& log_path,
                   Real gap_target, Real tol = kDefaultMatchTol,
                   std::optional<Real> inradius = std::nullopt);

// ---------------------------------------------------------------------------
// Wide neighborhood

/// Dual y >= 0 built from the matched log center:
/// y_i = eta / s_i(x_ln(eta)), so A^T y = -c up to centering error.
struct WideCertificate {
  Vector y;
  Real eta = 0;
  /// y^T s(x) / m.
  Real mu = 0;
  Real min_product = 0;
  /// 1 - m min_i y_i s_i(x) / y^T s(x).
  Real theta_effective = 0;
  /// ||A^T y + c||_2.
  Real dual_residual = 0;
};

/// Certificate for x from a known log center at parameter eta.
WideCertificate certificate_from_log_center(const LinearProgram& lp,
                                            const Vector& x, Real eta,
                                            const Vector& log_center);

inline constexpr Real kDefaultCertificateTol = 1e-8;

/// Matches eta to gap_level (default gap(x)) and builds the certificate.
/// Throws ConvergenceError when dual_residual > tol * (1 + ||c||_2).
WideCertificate wide_certificate(const LinearProgram& lp, const Vector& x,
                                 Real tol = kDefaultCertificateTol,
                                 std::optional<Real> gap_level = std::nullopt);

/// x in W_theta(mu) for the certificate's mu, checked from the definition.
bool in_wide_neighborhood(const LinearProgram& lp, const Vector& x,
                          const WideCertificate& cert, Real theta,
                          Real dual_tol);

// ---------------------------------------------------------------------------
// Bound verifiers

/// Slack ratios s_i(x^phi(mu)) / s_i(x^psi(eta)) at matched objective lie in
/// [(1 + C_{nu_phi})^{-1}, 1 + C_{nu_psi}]. Two checks per row.
std::vector<BoundCheck> verify_thm_equivalence(const LinearProgram& lp,
                                               const Barrier& phi,
                                               const Barrier& psi, Real mu,
                                               Real tol = kDefaultMatchTol);

/// min{mu/2, rho ||c|| / (2 nu + 4 sqrt(nu))} <= gap(x(mu)) <= mu nu.
std::vector<BoundCheck> verify_thm_gap(const LinearProgram& lp,
                                       const Barrier& bar, Real mu, Real rho,
                                       Real tol = kVerificationCenteringTol);

/// (1 - beta) s_i(x(mu)) <= s_i(x) <= (1 + beta) s_i(x(mu)) for
/// x in N_theta(mu). Throws PreconditionError when theta is out of range or x
/// is not in N_theta(mu).
std::vector<BoundCheck> verify_prop_slack(const LinearProgram& lp,
                                          const Barrier& bar, Real mu,
                                          const Vector& x, Real theta);

/// Gap analogue of verify_prop_slack; two checks.
std::vector<BoundCheck> verify_prop_gap(const LinearProgram& lp,
                                        const Barrier& bar, Real mu,
                                        const Vector& x, Real theta);

/// Random point of N_theta(mu) near x(mu): a seeded direction, scaled to a
/// uniformly drawn fraction of theta and backtracked until the decrement is
/// at most theta.
Vector sample_l2_point(const LinearProgram& lp, const Barrier& bar, Real mu,
                       Real theta, std::uint64_t seed);

/// Same with the center supplied.
Vector sample_l2_point(const LinearProgram& lp, const Barrier& bar, Real mu,
                       Real theta, std::uint64_t seed, const Vector& center);

// ---------------------------------------------------------------------------
// Certificate-chain constants

/// 1 - (1 - beta) / ((1 + beta)(1 + C_nu)(1 + C_m)) with m = 3r + 1.
Real corollary_omega(Real theta, Real nu, int r);

/// As corollary_omega with the log-barrier parameter m given directly.
Real corollary_omega_m(Real theta, Real nu, Real m);

struct CorollaryThresholds {
  /// (1 + beta)(3r + 1)(1 + C_nu) sqrt(t) / (1 - beta).
  Real gap0_min = 0;
  /// (1 - beta) / (2 (1 + beta)(1 + C_{3r+1})).
  Real gapK_max = 0;
  /// (320 r nu sqrt(t), 1 / (180 r)).
  Real simplified_gap0 = 0;
  Real simplified_gapK = 0;
  /// gap0_min <= simplified_gap0.
  bool gap0_dominated = false;
  /// gapK_max >= simplified_gapK.
  bool gapK_dominated = false;
};

/// Precise and simplified start/end gap thresholds. The dominance flags are
/// reported, not enforced: the simplified end threshold stops dominating for
/// theta close to 1/2 (about 0.475 at r = 1).
CorollaryThresholds corollary_thresholds(Real theta, Real nu, int r, Real t);

/// log10 of (2 (5r-1)(10r-1)^4 ((10r-2)!)^8 / (1 - omega))^{2^{r+2}}, in log
/// space throughout.
Real theorem3_log10_threshold(int r, Real omega);

}  // namespace ipmlab
