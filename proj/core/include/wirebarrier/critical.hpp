#pragma once

#include <vector>

#include "wirebarrier/saddle.hpp"

namespace wirebarrier {

/// Critical structures of the saddle curve x = G(v) at y = 0.
struct CriticalSet {
  // wave-function extrema (smaller/larger fixed-point root)
  double v_a = 0.0, x_a = 0.0;
  double v_b = 0.0, x_b = 0.0;
  // fold pair c1 (local max of x, smaller v), c2 (local min, larger v);
  // real at a > a0, complex-conjugate pair at a < a0
  Complex v_c1{0, 0}, v_c2{0, 0};
  Complex x_c1{0, 0}, x_c2{0, 0};
  bool folds_real = false;
};

/// Cusp data: the width a0 at which the folds merge at (x0, v0).
struct CriticalWidth {
  double a0 = 0.0;
  double x0 = 0.0;
  double v0 = 0.0;
};

/// Local cubic normal form of the saddle curve near the cusp:
///   x - x_center(a) + c_lin_y * i*y = c_cubic*(v-v0)^3 - c_lin_av*(a-a0)*(v-v0)
/// plus the derived fold-splitting and caustic-pierce coefficients.
struct SingularExpansion {
  CriticalWidth cusp;
  double c_lin_y = 0.0;    ///< = tan(theta), caustic tilt
  double c_cubic = 0.0;    ///< (1/6) d3x/dv3 at the cusp
  double c_lin_av = 0.0;   ///< -d2x/dv da at the cusp
  double delta_coeff = 0.0;  ///< fold half-separation delta = delta_coeff*sqrt(|a-a0|)
  double D_coeff = 0.0;      ///< pierce offset Delta = D_coeff*(a0-a)^{3/2}
  double x_drift = 0.0;      ///< dx/da at the cusp (center drift x_center(a))
  double tan_theta = 0.0;    ///< == c_lin_y
  double theta_deg = 0.0;

  double a = 0.0;       ///< width the expansion was requested at
  double delta = 0.0;   ///< delta_coeff*sqrt(|a-a0|)
  double Delta = 0.0;   ///< D_coeff*|a0-a|^{3/2} (pierce offset for a<a0)
  // singularity pierce positions in the (x, y) plane for the requested a:
  // a>a0: {x1,0},{x2,0}; a<a0: {x0_drift, +-Delta}. literal_* echoes the
  // 0.24*Delta-scaled second coordinate variant for comparison.
  double sing_x1 = 0.0, sing_y1 = 0.0;
  double sing_x2 = 0.0, sing_y2 = 0.0;
  double literal_y_offset = 0.0;
};

/// Local expansion constants of the action slope at the cusp:
/// d(i sigma)/dx = slope_const + slope_dv*(v - v0 - delta) + ... along the branch.
/// The reduced pair divides the fold polynomial scale 3*c_cubic out of the
/// linear term so the triple closes as
///   i sigma_sing = quartic_reduced * [w^4 + (8/3) delta w^3],  w = v - v0 - delta,
/// with quartic_reduced = (3/4)*slope_lin_reduced*c_cubic = slope_dv/4.
struct ActionExpansion {
  double slope_const = 0.0;        ///< |d(i sigma)/dx| at the cusp
  double slope_dv = 0.0;           ///< d/dv of the slope along the branch (raw)
  double slope_lin_reduced = 0.0;  ///< slope_dv / (3 c_cubic)
  double quartic_reduced = 0.0;    ///< slope_dv / 4
};

struct StokesLineSet {
  Complex origin{0, 0};
  std::vector<std::vector<Complex>> lines;
  /// max of |Im phi| / max(|Re phi|, floor) along each polyline
  std::vector<double> im_residuals;
};

/// One reflected classical trajectory x(eta, b) of the caustic family.
struct CausticTrajectory {
  double b = 0.0;
  std::vector<double> eta;
  std::vector<double> x;
  double eta_tangent = 0.0;  ///< point where dx/deta = tan(theta)
  double x_tangent = 0.0;
};

/// Both real fixed-point roots v = 2 sqrt((1+A)(gamma+A)) with x = 1+A.
/// At alpha0 = 0 the two extrema degenerate to v = 2 sqrt(gamma), x = 1.
/// Throws NoRealRoot when the scan finds no crossing.
CriticalSet find_extrema(const BarrierParams& p);

/// Fold pair dx/dv = 0 at fixed y (default 0). Real pair for a > a0,
/// complex-conjugate pair otherwise. Throws FoldsMerged within tolerance of
/// the cusp and NoRealRoot when no fold pair exists (alpha0 = 0).
CriticalSet find_folds(const BarrierParams& p, double y = 0.0);

/// Solves dx/dv = d2x/dv2 = 0 jointly in (v, a) at y = 0.
CriticalWidth find_critical_width(const BarrierParams& p);

/// Cubic unfolding coefficients from exact derivatives at the cusp.
/// Throws WindowViolation when |a-a0| > window_frac*a0 (default 0.1).
SingularExpansion unfold_cubic(const BarrierParams& p, double window_frac = 0.1);

ActionExpansion action_expansion_coeffs(const BarrierParams& p, double window_frac = 0.1);

/// Stokes lines of the singular action in the complex v plane at a < a0:
/// Im[(W)^4 + (8i/3)|delta| W^3] = 0 traced from W = 0 (v = v0 + i|delta|).
StokesLineSet trace_stokes_lines_2d(const BarrierParams& p, double trace_radius = 1.0);

/// Family of reflected classical trajectories near the cusp, one per b.
std::vector<CausticTrajectory> caustic_trajectories(const BarrierParams& p,
                                                    const std::vector<double>& b_values,
                                                    int samples_per_curve = 101);

}  // namespace wirebarrier
