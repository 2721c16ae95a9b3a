#include "wirebarrier/impurity.hpp"

#include <cmath>

#include "wirebarrier/errors.hpp"
#include "wirebarrier/quadrature.hpp"

namespace wirebarrier {

namespace {

// sqrt(1-x) on the sheet where the x > 1 wave is outgoing
Complex sqrt_1mx(double x) {
  return x <= 1.0 ? Complex(std::sqrt(1.0 - x), 0.0) : Complex(0.0, -std::sqrt(x - 1.0));
}

// u(x,y) with the depth folded into the exponent, so huge Gaussian
// enhancement factors cancel against a tiny u without overflow
Complex impurity_u_fused(Complex x, Complex y, const ImpurityParams& p) {
  const double a2 = p.a_imp * p.a_imp;
  const double logu = std::log(p.u) + p.u_exponent;
  const Complex g1 = -((x - p.l) * (x - p.l) + y * y) / a2 + logu;
  const Complex g2 = -((x + p.l) * (x + p.l) + y * y) / a2 + logu;
  if (g1.real() > kGaussianExpCap || g2.real() > kGaussianExpCap)
    throw OutOfRange("impurity integrand exponent exceeds cap " +
                     std::to_string(kGaussianExpCap));
  return -(std::exp(g1) + std::exp(g2));
}

}  // namespace

Complex sigma0(double x, double y, double k) {
  if (k * k >= 1.0)
    throw DomainError("sigma0 requires k^2 < 1 (underbarrier), got k^2 = " +
                      std::to_string(k * k));
  if (x <= 1.0) {
    const double s = std::pow(1.0 - x, 1.5);
    return Complex(k * y, (2.0 / 3.0) * (1.0 - s));
  }
  const double s = std::pow(x - 1.0, 1.5);
  return Complex(k * y + (2.0 / 3.0) * s, 2.0 / 3.0);
}

Complex sigma1(double x, double y, const ImpurityParams& p, double* tail_bound_out) {
  p.validate();
  if (p.u == 0.0) {
    if (tail_bound_out) *tail_bound_out = 0.0;
    return {0.0, 0.0};
  }
  const double k = p.k;
  const double a = p.a_imp;
  const Complex shift = -2.0 * Complex(0, 1) * k * sqrt_1mx(x) + Complex(0, 2.0 * k);
  // oscillatory legs cancel heavily: anchor the tolerance to the fused peak
  // magnitude u*exp(u_exponent + (4k^2-l^2)/a^2) rather than to the result
  const double peak_mag = std::exp(std::min(p.log_perturbation_size(), 700.0));
  QuadratureOptions qopt{1e-11, 2e-13 * std::max(peak_mag, 1e-290), 44, 2000000};

  // semi-infinite leg: int_0^inf dy1/(2k) u(0, y1 + y + shift)
  const double rho = (Complex(y, 0) + shift).real();
  const double peak = std::max(rho, 0.0);
  const double Ytr = -rho + std::sqrt(peak * peak + 37.0 * a * a);
  auto f1 = [&](double y1) { return impurity_u_fused(Complex(0, 0), y1 + y + shift, p); };
  Complex I1 = integrate(f1, 0.0, std::max(Ytr, 0.0), qopt) / (2.0 * k);
  if (tail_bound_out) {
    const double arg = Ytr + rho;
    *tail_bound_out = std::exp(-(arg * arg - peak * peak) / (a * a));
  }

  // barrier leg: int_0^x i dx1/(2 sqrt(1-x1)) u(x1, y + base + 2ik sqrt(1-x1));
  // substitutions x1 = 1-t^2 and x1 = 1+s^2 remove the x1 = 1 singularity
  const Complex base = -2.0 * Complex(0, 1) * k * sqrt_1mx(x);
  auto u_at = [&](double x1) {
    return impurity_u_fused(Complex(x1, 0), y + base + 2.0 * Complex(0, 1) * k * sqrt_1mx(x1), p);
  };
  Complex I2{0, 0};
  const double t1 = std::sqrt(std::max(0.0, 1.0 - std::min(x, 1.0)));
  auto g_below = [&](double t) { return u_at(1.0 - t * t); };
  I2 += Complex(0, 1) * integrate(g_below, t1, 1.0, qopt);
  if (x > 1.0) {
    auto g_above = [&](double s) { return u_at(1.0 + s * s); };
    I2 -= integrate(g_above, 0.0, std::sqrt(x - 1.0), qopt);
  }
  return I1 + I2;
}

ImpurityAction impurity_action(double x, double y, const ImpurityParams& p, double B) {
  ImpurityAction act;
  act.sigma0_val = sigma0(x, y, p.k);
  act.sigma1_val = sigma1(x, y, p, &act.tail_bound);
  act.total = act.sigma0_val + act.sigma1_val;
  act.perturbation_ok = p.u > 0.0 && p.log_perturbation_size() < std::log(0.1);
  act.semiclassical_ok = p.log_semiclassical_ratio(B) < std::log(0.1);
  act.window_ok = p.window_ok();
  return act;
}

PsiProfilePoint psi_profile_outside(double x, double y, const ImpurityParams& p, double B) {
  p.validate();
  if (x <= 1.0) throw DomainError("psi_profile_outside requires x > 1");
  if (!(p.l < 2.0 * p.k_sq()))
    throw RegimeViolation("closed-form window violated: l < 2k^2 fails, margin " +
                          std::to_string(2.0 * p.k_sq() - p.l));
  if (!(p.k_sq() < 1.0)) throw RegimeViolation("closed-form window violated: 2k^2 < 2 fails");
  if (p.u > 0.0 && p.log_perturbation_size() >= 0.0)
    throw RegimeViolation("perturbation condition u*exp((4k^2-l^2)/a^2) << 1 fails: log size " +
                          std::to_string(p.log_perturbation_size()));
  if (p.log_semiclassical_ratio(B) >= 0.0)
    throw RegimeViolation("semiclassical condition exp((4k^2-l^2)/a^2) << B fails: log ratio " +
                          std::to_string(p.log_semiclassical_ratio(B)));

  PsiProfilePoint pt;
  pt.x = x;
  pt.y = y;
  const Complex s0 = sigma0(x, y, p.k);
  const Complex s1 = sigma1(x, y, p);
  pt.log_psi = -B * (s0.imag() + s1.imag());
  pt.exponent_quadrature = -B * s1.imag();

  const double k2 = p.k_sq(), a2 = p.a_imp * p.a_imp;
  const double rho = y - 2.0 * p.k * std::sqrt(x - 1.0);
  const double amp =
      p.u == 0.0 ? 0.0
                 : B * a2 * p.l / (8.0 * k2 * (2.0 * k2 - p.l)) *
                       std::exp(std::log(p.u) + p.u_exponent + (4.0 * k2 - p.l * p.l) / a2);
  pt.exponent_closed_form =
      amp * std::exp(-rho * rho / a2) * std::cos(4.0 * p.k * rho / a2);
  return pt;
}

EnhancementReport enhancement_report(const ImpurityParams& p, double B) {
  EnhancementReport r;
  if (p.k == 0.0) {
    r.wkb_only = true;  // zero tangent momentum: no underbarrier phase to scatter
    return r;
  }
  r.u_eff = p.perturbation_size();
  r.perturbation_size = r.u_eff;
  r.semiclassical_ratio = p.semiclassical_ratio(B);
  r.perturbation_ok = p.u > 0.0 && p.log_perturbation_size() < std::log(0.1);
  r.semiclassical_ok = p.log_semiclassical_ratio(B) < std::log(0.1);
  r.window_ok = p.window_ok();
  r.window_margin = p.window_margin();
  r.impurity_after_exit = p.l > 1.0;
  return r;
}

}  // namespace wirebarrier
