#pragma once

#include <vector>

#include "wirebarrier/critical.hpp"
#include "wirebarrier/params.hpp"

namespace wirebarrier {

/// Imaginary-time path from the exit point (x_b, 0) back to the wire:
/// x(tau) = x_b - tau^2, eta(tau) = 2 tau sqrt(x_b-1+gamma), tau0 = sqrt(x_b).
struct ImaginaryTimeTrajectory {
  std::vector<double> tau_grid;
  std::vector<double> x_of_tau, xdot_of_tau;
  std::vector<double> eta_of_tau, etadot_of_tau;
  double tau0 = 0.0;
  double x_b = 0.0, v_b = 0.0;
  double max_energy_residual = 0.0;   ///< max deviation from the energy integral
  double max_closed_form_dev = 0.0;   ///< max |x_num - (x_b - tau^2)|
};

/// RK4 integration of the equations of motion with the exit-point boundary
/// data. Throws IntegratorTolerance if the path deviates from the closed form
/// by more than tol (default 1e-10).
ImaginaryTimeTrajectory integrate_trajectory(const BarrierParams& p, int steps = 2000,
                                             double tol = 1e-10);

/// Lagrangian part of the penetration exponent, by quadrature along the
/// trajectory; equals (4B/3) sqrt(1+A_b) (1 - 3 gamma - 2 A_b) in closed form.
double action_A0(const BarrierParams& p, const ImaginaryTimeTrajectory& traj);
double action_A0_closed_form(const BarrierParams& p, double v_b);

/// Boundary part 2B * integral_0^{v_b} sqrt(gamma + alpha^2(i eta)) d eta.
double action_A1(const BarrierParams& p, double v_b);

struct PenetrationResult {
  double A0 = 0.0;
  double A1 = 0.0;
  double w_log = 0.0;     ///< -(A0+A1), natural log of w up to prefactor
  double wkb_log = 0.0;   ///< -4B/3
  double x_b = 0.0;
  double v_b = 0.0;
  /// the propagating-wave channel can only add density at the exit point,
  /// so w_log below the homogeneous baseline flags a regime problem
  bool exceeds_wkb_baseline = true;
};

PenetrationResult penetration(const BarrierParams& p);

/// 2B * Im[sigma(x_b,0) - sigma(0,0)] by the direct Hamilton-Jacobi route,
/// the cross-method counterpart of A0+A1.
double penetration_exponent_hj(const BarrierParams& p);

struct ThresholdResult {
  double a_R = 0.0;
  double slope = 0.0;  ///< d(A0+A1)/da / B at a_R
  double x_b = 0.0;
  double v_b = 0.0;
};

/// Root of A0(a) + A1(a) = 0 in a, scanned over [a0, 4 a0] with 64 seed
/// points before polishing. Throws NoRoot when the exponent never vanishes
/// in the bracket (alpha0 -> 0).
ThresholdResult find_threshold(const BarrierParams& p_without_a);

}  // namespace wirebarrier
