#include "wirebarrier/params.hpp"

#include <cmath>

#include "wirebarrier/errors.hpp"

namespace wirebarrier {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ok: return "Ok";
    case ErrorCode::config_error: return "ConfigError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::near_fold: return "NearFold";
    case ErrorCode::step_collapse: return "StepCollapse";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::no_real_root: return "NoRealRoot";
    case ErrorCode::folds_merged: return "FoldsMerged";
    case ErrorCode::window_violation: return "WindowViolation";
    case ErrorCode::tracer_stall: return "TracerStall";
    case ErrorCode::integrator_tolerance: return "IntegratorTolerance";
    case ErrorCode::no_root: return "NoRoot";
    case ErrorCode::regime_violation: return "RegimeViolation";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::solver_failure: return "SolverFailure";
    case ErrorCode::unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<std::string> BarrierParams::validate() const {
  if (!std::isfinite(B) || B <= 0.0)
    throw DomainError("B must be finite and positive, got " + std::to_string(B));
  if (!(gamma > 0.0 && gamma < 1.0))
    throw DomainError("gamma must lie in (0,1) (energy below the barrier), got " +
                      std::to_string(gamma));
  if (alpha0 < 0.0) throw DomainError("alpha0 must be >= 0");
  if (a <= 0.0) throw DomainError("profile width a must be positive");
  if (B < 25.0)
    return "B = " + std::to_string(B) +
           " is below the semiclassical threshold (~25); exponent-level results only";
  return std::nullopt;
}

BarrierParams to_dimensionless(const PhysicalParams& p, double gamma, double alpha0,
                               double a_phys) {
  if (p.u0 <= 0 || p.E_field <= 0 || p.m <= 0 || p.hbar <= 0)
    throw DomainError("physical parameters must be positive");
  BarrierParams d;
  d.B = p.u0 * std::sqrt(2.0 * p.m * p.u0) / (p.hbar * p.E_field);
  d.gamma = gamma;
  d.alpha0 = alpha0;
  d.a = a_phys * p.E_field / p.u0;
  return d;
}

PhysicalParams from_dimensionless(const BarrierParams& d, double u0, double m, double hbar,
                                  double* a_phys_out) {
  PhysicalParams p;
  p.u0 = u0;
  p.m = m;
  p.hbar = hbar;
  p.E_field = u0 * std::sqrt(2.0 * m * u0) / (hbar * d.B);
  if (a_phys_out) *a_phys_out = d.a * u0 / p.E_field;
  return p;
}

bool ImpurityParams::window_ok() const { return l < 2.0 * k_sq() && k_sq() < 1.0; }

double ImpurityParams::window_margin() const {
  return std::min(2.0 * k_sq() - l, 2.0 - 2.0 * k_sq());
}

double ImpurityParams::log_perturbation_size() const {
  const double e = (4.0 * k_sq() - l * l) / (a_imp * a_imp);
  return std::log(u) + u_exponent + e;
}

double ImpurityParams::perturbation_size() const {
  return std::exp(std::min(log_perturbation_size(), 700.0));
}

double ImpurityParams::log_semiclassical_ratio(double B) const {
  const double e = (4.0 * k_sq() - l * l) / (a_imp * a_imp);
  return e - std::log(B);
}

double ImpurityParams::semiclassical_ratio(double B) const {
  return std::exp(std::min(log_semiclassical_ratio(B), 700.0));
}

void ImpurityParams::validate() const {
  if (u < 0.0) throw DomainError("impurity depth u must be non-negative");
  if (a_imp <= 0.0) throw DomainError("impurity width must be positive");
  if (k_sq() >= 1.0)
    throw DomainError("tangent wave vector must satisfy k^2 < 1 (underbarrier), got k^2 = " +
                      std::to_string(k_sq()));
}

}  // namespace wirebarrier
