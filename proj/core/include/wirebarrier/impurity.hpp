#pragma once

#include <optional>
#include <string>

#include "wirebarrier/params.hpp"
#include "wirebarrier/potential.hpp"

namespace wirebarrier {

/// Unperturbed action for the homogeneous wire with tangent wave vector k:
/// sigma0 = k y + i (2/3)[1 - (1-x)^{3/2}], continued for x > 1 with the
/// outgoing branch sqrt(1-x) = -i sqrt(x-1). Throws DomainError if k^2 >= 1.
Complex sigma0(double x, double y, double k);

/// First-order impurity correction, both integrals by adaptive quadrature.
/// The semi-infinite leg is truncated where the Gaussian integrand falls
/// below 1e-16 of its on-path peak; the achieved bound is written to
/// tail_bound_out when given.
Complex sigma1(double x, double y, const ImpurityParams& p, double* tail_bound_out = nullptr);

struct ImpurityAction {
  Complex sigma0_val;
  Complex sigma1_val;
  Complex total;
  bool perturbation_ok = false;   ///< u * exp((4k^2-l^2)/a^2) << 1
  bool semiclassical_ok = false;  ///< exp((4k^2-l^2)/a^2) << B
  bool window_ok = false;         ///< l < 2k^2 < 2
  double tail_bound = 0.0;
};

ImpurityAction impurity_action(double x, double y, const ImpurityParams& p, double B);

/// |psi| profile outside the barrier near the classical trajectory
/// y = 2k sqrt(x-1). The prefactor (x-1)^{-1/4} is carried symbolically.
struct PsiProfilePoint {
  double x = 0.0, y = 0.0;
  double exponent_quadrature = 0.0;  ///< -B Im(sigma0+sigma1) + 2B/3 (enhancement part)
  double exponent_closed_form = 0.0; ///< B a^2 l u e^{(4k^2-l^2)/a^2}/(8k^2(2k^2-l)) * envelope
  double log_psi = 0.0;              ///< -B Im(sigma0+sigma1)
  std::string prefactor = "(x-1)^(-1/4)";
};

/// Throws RegimeViolation naming the failed inequality of the closed-form
/// regime (l < 2k^2 < 2 and both applicability conditions).
PsiProfilePoint psi_profile_outside(double x, double y, const ImpurityParams& p, double B);

struct EnhancementReport {
  double u_eff = 0.0;              ///< u * exp((4k^2-l^2)/a^2)
  double perturbation_size = 0.0;  ///< u_eff itself (must be << 1)
  double semiclassical_ratio = 0.0;///< exp((4k^2-l^2)/a^2)/B (must be << 1)
  bool perturbation_ok = false;
  bool semiclassical_ok = false;
  bool window_ok = false;
  double window_margin = 0.0;
  bool impurity_after_exit = false;  ///< l > 1
  bool wkb_only = false;             ///< k = 0, no enhancement channel
};

EnhancementReport enhancement_report(const ImpurityParams& p, double B);

}  // namespace wirebarrier
