#pragma once

#include <complex>

#include "wirebarrier/params.hpp"
#include "wirebarrier/potential.hpp"

namespace wirebarrier {

inline constexpr double kRootTol = 1e-12;       ///< residual tolerance on the saddle equation
inline constexpr int kNewtonMaxIter = 50;
inline constexpr double kFoldThreshold = 1e-6;  ///< |dx/dv| below this switches to arclength
inline constexpr double kNearFoldDetect = 1e-3; ///< fold proximity at a failed Newton solve

/// Square-root branch state carried along continuation paths: the chosen
/// values of p = sqrt(1+A) and q = sqrt(gamma+A). Fresh state means principal
/// branches; update() keeps each root continuous with its previous value.
struct SqrtBranch {
  Complex p{1.0, 0.0};
  Complex q{1.0, 0.0};
  bool fresh = true;

  void update(Complex A, double gamma);
  /// sheet tags relative to the principal branch, +1 or -1 per root
  int sheet_p() const;
  int sheet_q() const;
};

/// Saddle-equation geometry at fixed real y: x = G(v) with
/// G(v) = s*sqrt((1+A)/(gamma+A)) - s^2/(4(gamma+A)), s = v+iy, A = alpha^2(iv).
/// All derivatives are closed-form in the Gaussian profile.
struct SaddleGeometry {
  BarrierParams params;
  double y = 0.0;

  Complex A(Complex v) const;       ///< alpha^2(iv)
  Complex dA(Complex v) const;      ///< dA/dv = (4v/a^2) A
  Complex G(Complex v) const;
  Complex G(Complex v, SqrtBranch& br) const;
  Complex dG(Complex v) const;      ///< dx/dv
  Complex dG(Complex v, SqrtBranch& br) const;
  Complex d2G(Complex v) const;     ///< d2x/dv2
  Complex d2G(Complex v, SqrtBranch& br) const;
  Complex dG_ds(Complex v) const;   ///< dx/d(iy) at fixed v
  Complex dG_da(Complex v) const;   ///< dx/da at fixed v

  /// third v-derivative and mixed (v,a) derivatives, exact to roundoff via a
  /// complex-step on the analytic lower-order derivatives (real v, y = 0 only)
  double d3G_real(double v) const;
  double dGdv_da_real(double v) const;
  double d2Gdv2_da_real(double v) const;
};

struct SaddlePoint {
  double x = 0.0;
  Complex y{0.0, 0.0};
  Complex v{0.0, 0.0};
  double residual = 0.0;
  int iterations = 0;
};

/// Complex-Newton root of the saddle equation nearest v_guess at fixed (x, y).
/// Throws NearFold when the iteration stalls against a fold (|dx/dv| small),
/// NoConvergence otherwise (both carry the last iterate in the message).
SaddlePoint solve_saddle(double x, Complex y, const BarrierParams& p, Complex v_guess);

/// Action value with gradient at a point of the saddle manifold.
struct ComplexAction {
  Complex sigma;
  Complex dsigma_dx;
  Complex dsigma_dy;
  Complex v;
  int sheet_p = +1;  ///< recorded square-root sheets
  int sheet_q = +1;
};

/// Evaluates the general Hamilton-Jacobi integral at (x, y, v): the x1
/// quadrature in closed form, the y1 contour as an adaptive quadrature over
/// the straight segment [0, iv], gradient from the saddle relations.
/// Pre: (x,y,v) satisfies the saddle equation to tolerance (not re-checked).
/// The optional branch state selects square-root sheets; default principal.
ComplexAction action(double x, Complex y, const BarrierParams& p, Complex v,
                     const SqrtBranch* branch = nullptr);

/// Detour check for the y1 contour: re-evaluates the segment integral on a
/// two-leg path 0 -> mid -> iv and returns |difference|.
double action_contour_deviation(const BarrierParams& p, Complex v,
                                Complex mid_offset = Complex(0.15, 0.1));

}  // namespace wirebarrier
