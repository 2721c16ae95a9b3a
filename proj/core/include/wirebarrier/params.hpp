#pragma once

#include <optional>
#include <string>

namespace wirebarrier {

/// Wire profile family seam. Only the Gaussian family is implemented and
/// tested against reference constants; a new family must also supply the
/// closed-form derivative set the saddle geometry relies on.
enum class ProfileFamily { gaussian };

/// Dimensionless problem definition. Lengths are in units of u0/E_field,
/// energies in units of u0, the particle energy is E = (gamma-1)*u0.
struct BarrierParams {
  double B = 30.0;         ///< semiclassical parameter, u0*sqrt(2*m*u0)/(hbar*E_field)
  double gamma = 0.2;      ///< energy parameter, 0 < gamma < 1 below the barrier
  double alpha0 = 0.0;     ///< wire profile amplitude (alpha0 >= 0)
  double a = 2.0;          ///< profile width
  ProfileFamily profile = ProfileFamily::gaussian;

  /// Throws DomainError on invalid fields; returns a warning string for
  /// soft conditions (B below the semiclassical threshold of ~25).
  std::optional<std::string> validate() const;

  double alpha0_sq() const { return alpha0 * alpha0; }
};

/// Physical-unit inputs for the same problem.
struct PhysicalParams {
  double u0 = 1.0;       ///< well depth (energy)
  double E_field = 1.0;  ///< electric field
  double m = 1.0;        ///< mass
  double hbar = 1.0;     ///< action
};

/// B = u0*sqrt(2*m*u0)/(hbar*E_field); width a_phys maps to a = a_phys*E_field/u0.
BarrierParams to_dimensionless(const PhysicalParams& p, double gamma, double alpha0,
                               double a_phys);

/// Inverse of to_dimensionless given the scale (u0, m, hbar); recovers E_field
/// from B and the physical width from a.
PhysicalParams from_dimensionless(const BarrierParams& d, double u0, double m, double hbar,
                                  double* a_phys_out = nullptr);

/// Localized impurity inside the barrier: two Gaussians of depth u mirrored at
/// x = +-l, width a_imp; the prebarrier state carries tangent wave vector k
/// with gamma = k^2.
struct ImpurityParams {
  double u = 1e-6;    ///< depth (u >= 0)
  double l = 0.5;     ///< center offset along x
  double a_imp = 0.1; ///< width (expected << 1)
  double k = 0.7;     ///< tangent wave vector
  /// optional log-scale factor: the effective depth is u*exp(u_exponent).
  /// Gaussian enhancement factors reach exp((4k^2-l^2)/a^2), far beyond the
  /// double range at small widths; carrying the depth partly in log form
  /// keeps every integrand representable.
  double u_exponent = 0.0;

  double k_sq() const { return k * k; }

  /// l < 2k^2 < 2 window for the closed-form regime.
  bool window_ok() const;
  /// margin of the window condition, min(2k^2 - l, 2 - 2k^2)
  double window_margin() const;
  /// perturbation condition u*exp((4k^2-l^2)/a^2) << 1, reported as the value itself
  double perturbation_size() const;
  double log_perturbation_size() const;  ///< ln of the same, overflow-free
  /// semiclassical condition exp((4k^2-l^2)/a^2) << B, reported as the ratio to B
  double semiclassical_ratio(double B) const;
  double log_semiclassical_ratio(double B) const;

  void validate() const;  ///< throws DomainError on u <= 0, a_imp <= 0, k^2 >= 1
};

}  // namespace wirebarrier
