#pragma once

#include <functional>
#include <vector>

#include "wirebarrier/critical.hpp"
#include "wirebarrier/params.hpp"

namespace wirebarrier {

/// Scattering solve of -(hbar^2/2m) psi'' + V(x) psi = E psi on [-L, L] with
/// a wave incident from the left. Numerov with automatic step refinement
/// until |R| is stable to 1e-6; |R| extracted by two-point projection onto
/// the discrete plane waves. Throws SolverFailure when refinement stalls.
struct Scattering1D {
  double R_mag = 0.0;
  double T_mag = 0.0;
  double flux_defect = 0.0;  ///< | |R|^2 + |T|^2 - 1 |
  double step = 0.0;
  int refinements = 0;
};

Scattering1D scatter_1d(const std::function<double(double)>& V, double E, double L,
                        const PhysicalParams& units, int pts_per_wavelength = 40);

struct Reflection1DResult {
  double R_exact_mag = 0.0;
  double R_wkb_mag = 0.0;  ///< exp[-pi a k (1 - sqrt(V/E))]
  double ka = 0.0;
  bool regime_ok = false;  ///< ka >= 10 and E/V >= 1.2
  double flux_defect = 0.0;
  double T_mag = 0.0;
};

/// Overbarrier reflection from V/cosh^2(x/a), exact numerics vs the
/// semiclassical exponent. Pre: E > V > 0.
Reflection1DResult reflect_cosh_barrier(double E, double V, double a,
                                        const PhysicalParams& units = {1.0, 1.0, 0.5, 1.0});

/// Stokes lines Im phi = 0 of the overbarrier problem in the complex x
/// plane, from the terminal point x_c = i a atan(sqrt(E/V-1)); seeded with
/// the local 3/2-power rays and continued with the full phase integral.
StokesLineSet stokes_lines_1d(double E, double V, double a, double trace_radius = 0.0);

enum class WireProfile { gaussian, sech };

struct WireZeroFieldResult {
  double R_mag = 0.0;        ///< at the requested width
  double exponent_fit = 0.0; ///< fitted c in |R| ~ exp[-c a sqrt(2m(E+u0))/hbar]
  double fit_residual = 0.0; ///< RMS fit residual / range of log|R|
  double max_flux_defect = 0.0;
  std::vector<double> sweep_a;
  std::vector<double> sweep_logR;
  double phase_dev = 0.0;    ///< max rel deviation of the local wavenumber check
};

/// Reflection of the along-wire motion from the effective well -u0 beta^2(y)
/// at zero field, swept over a decade of widths around `width` to fit the
/// exponential law. Pre: E > -u0.
WireZeroFieldResult wire_overbarrier_reflection(double beta0, double width, double E, double u0,
                                                const PhysicalParams& units = {1.0, 1.0, 0.5, 1.0},
                                                WireProfile profile = WireProfile::sech,
                                                int sweep_points = 10);

}  // namespace wirebarrier
