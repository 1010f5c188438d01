#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tss/groupoid.hpp"

namespace tss {

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string model;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
  int samples = 1000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  double d_omega_step = 1e-5;  // finite-difference step for the dOmega check
  double d_omega_tol = 1e-6;
  bool perturb_multiplication = false;  // negative control: drops the q' term
  bool modular_lift_use_hq = false;     // negative control: H_q instead of H_p
};

/// Random composable triples: associativity of the product, source/target of
/// products, unit laws, inverse laws.
VerificationReport verify_groupoid_axioms(const GroupoidModel& m, const VerifyOptions& opt);

/// (a) Omega * Pi = sigma * Id for one global empirical sign sigma;
/// (b) Omega = t^*(leaf form) - s^*(leaf form) where the leaf primitive is
///     available (affine plane, one-curve cylinder);
/// (c) dOmega = 0 by finite differences;
/// (d) the moment maps push Pi to sigma * pi and -sigma * pi respectively.
VerificationReport verify_symplectic_compatibility(const GroupoidModel& m,
                                                   const VerifyOptions& opt);

/// Affine plane only: the Hamiltonian field of p pushes forward to d/dy
/// under both moment maps.
VerificationReport verify_modular_lift(const GroupoidModel& m, const VerifyOptions& opt);

/// alpha(r, 0) = r, alpha(+-1, p) = +-1, alpha(alpha(r,p),p') = alpha(r,p+p').
VerificationReport verify_alpha_group_law(const VerifyOptions& opt);

/// Numerical modular period of the profile f around its simple zero r0:
/// 2*pi / |f'(r0)| with a central difference of step h. Throws DomainError
/// when f(r0) is not a zero (|f(r0)| > 1e-10) or the zero is degenerate
/// (|f'(r0)| < 1e-8).
double modular_period_numeric(const std::function<double(double)>& f, double r0, double h);

/// Smooth monotone ramp for the annulus twist: 0 below r = 1, 2*pi above
/// r = 2, nondecreasing in between.
struct TwistProfile {
  std::function<double(double)> f;
};
TwistProfile default_twist_profile();

/// The annulus twist (r, theta) -> (r, theta + f(r)).
Vec2 dehn_twist_map(const TwistProfile& profile, const Vec2& pt);

/// Checks the ramp conditions by sampling, boundary triviality, unit Jacobian
/// determinant, and that the k-fold composite equals the twist with profile
/// k*f. Throws DomainError when the profile violates the ramp conditions.
VerificationReport verify_twist(const TwistProfile& profile, const VerifyOptions& opt);

}  // namespace tss
