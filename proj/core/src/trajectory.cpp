#include "wirebarrier/trajectory.hpp"

#include <cmath>

#include "wirebarrier/errors.hpp"
#include "wirebarrier/quadrature.hpp"
#include "wirebarrier/saddle.hpp"

namespace wirebarrier {

ImaginaryTimeTrajectory integrate_trajectory(const BarrierParams& p, int steps, double tol) {
  const CriticalSet cs = find_extrema(p);
  ImaginaryTimeTrajectory tr;
  tr.x_b = cs.x_b;
  tr.v_b = cs.v_b;
  tr.tau0 = std::sqrt(cs.x_b);

  const double etadot0 = 2.0 * std::sqrt(cs.x_b - 1.0 + p.gamma);
  const double h = tr.tau0 / steps;

  // state (x, xdot, eta, etadot); xddot = -2, etaddot = 0
  double x = cs.x_b, xd = 0.0, eta = 0.0, etad = etadot0;
  auto push = [&](double tau) {
    tr.tau_grid.push_back(tau);
    tr.x_of_tau.push_back(x);
    tr.xdot_of_tau.push_back(xd);
    tr.eta_of_tau.push_back(eta);
    tr.etadot_of_tau.push_back(etad);
    const double energy = -0.25 * xd * xd + 0.25 * etad * etad - x - (p.gamma - 1.0);
    tr.max_energy_residual = std::max(tr.max_energy_residual, std::abs(energy));
    const double closed = cs.x_b - tau * tau;
    tr.max_closed_form_dev = std::max(tr.max_closed_form_dev, std::abs(x - closed));
  };
  push(0.0);
  for (int i = 1; i <= steps; ++i) {
    // RK4; exact for this polynomial right-hand side
    const double k1x = xd, k1xd = -2.0, k1e = etad;
    const double k2x = xd + 0.5 * h * k1xd, k2e = etad;
    const double k3x = xd + 0.5 * h * k1xd, k3e = etad;
    const double k4x = xd + h * k1xd, k4e = etad;
    x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    xd += h * k1xd;
    eta += h / 6.0 * (k1e + 2 * k2e + 2 * k3e + k4e);
    push(double(i) * h);
  }
  if (tr.max_closed_form_dev > tol)
    throw IntegratorTolerance("trajectory deviates from the closed form by " +
                              std::to_string(tr.max_closed_form_dev));
  return tr;
}

double action_A0(const BarrierParams& p, const ImaginaryTimeTrajectory& tr) {
  // composite Simpson of the Lagrangian over the stored grid
  const size_t n = tr.tau_grid.size();
  if (n < 3 || n % 2 == 0) throw QuadratureFailure("trajectory grid must have odd point count");
  auto lagr = [&](size_t i) {
    const double xd = tr.xdot_of_tau[i], ed = tr.etadot_of_tau[i];
    return 0.25 * xd * xd - 0.25 * ed * ed - tr.x_of_tau[i] + 1.0 - p.gamma;
  };
  const double h = tr.tau_grid[1] - tr.tau_grid[0];
  double sum = lagr(0) + lagr(n - 1);
  for (size_t i = 1; i + 1 < n; ++i) sum += lagr(i) * (i % 2 ? 4.0 : 2.0);
  return 2.0 * p.B * sum * h / 3.0;
}

double action_A0_closed_form(const BarrierParams& p, double v_b) {
  const double Ab = alpha_sq_iv(Complex(v_b, 0.0), p).real();
  return (4.0 * p.B / 3.0) * std::sqrt(1.0 + Ab) * (1.0 - 3.0 * p.gamma - 2.0 * Ab);
}

double action_A1(const BarrierParams& p, double v_b) {
  auto integrand = [&](double eta) {
    return std::sqrt(p.gamma + alpha_sq_iv(Complex(eta, 0.0), p).real());
  };
  // exponent-limited segmentation keeps relative accuracy uniform when the
  // integrand grows by many decades
  const double growth = p.alpha0 > 0 ? 2.0 * v_b * v_b / (p.a * p.a) : 0.0;
  const int segs = std::max(1, int(growth / 6.0) + 1);
  double total = 0.0;
  double err = 0.0;
  for (int i = 0; i < segs; ++i) {
    const double lo = v_b * double(i) / segs;
    const double hi = v_b * double(i + 1) / segs;
    double e = 0.0;
    total += integrate(integrand, lo, hi, {1e-12, 0.0, 48}, &e);
    err += e;
  }
  if (err > 1e-8 * std::abs(total))
    throw QuadratureFailure("A1 quadrature error estimate " + std::to_string(err));
  return 2.0 * p.B * total;
}

PenetrationResult penetration(const BarrierParams& p) {
  const CriticalSet cs = find_extrema(p);
  PenetrationResult r;
  r.x_b = cs.x_b;
  r.v_b = cs.v_b;
  r.A0 = action_A0_closed_form(p, cs.v_b);
  r.A1 = action_A1(p, cs.v_b);
  r.w_log = -(r.A0 + r.A1);
  r.wkb_log = -4.0 * p.B / 3.0;
  r.exceeds_wkb_baseline = r.w_log >= r.wkb_log - 1e-12 * p.B;
  return r;
}

double penetration_exponent_hj(const BarrierParams& p) {
  const CriticalSet cs = find_extrema(p);
  const ComplexAction act = action(cs.x_b, Complex(0.0, 0.0), p, Complex(cs.v_b, 0.0));
  return 2.0 * p.B * act.sigma.imag();  // sigma(0,0) = 0 by normalization
}

ThresholdResult find_threshold(const BarrierParams& p_without_a) {
  if (p_without_a.alpha0 <= 0.0)
    throw NoRoot("threshold requires alpha0 > 0: the homogeneous exponent never vanishes");
  const CriticalWidth cw = find_critical_width(p_without_a);

  auto total = [&](double a) {
    BarrierParams q = p_without_a;
    q.a = a;
    const CriticalSet cs = find_extrema(q);
    return (action_A0_closed_form(q, cs.v_b) + action_A1(q, cs.v_b)) / q.B;
  };

  const double lo = cw.a0 * 1.001, hi = 4.0 * cw.a0;
  const int seeds = 64;
  double prev_a = lo, prev_f = total(lo);
  double root_lo = 0.0, root_hi = 0.0;
  bool found = false;
  for (int i = 1; i <= seeds; ++i) {
    const double a = lo + (hi - lo) * double(i) / seeds;
    const double f = total(a);
    if ((prev_f < 0) != (f < 0)) {
      root_lo = prev_a;
      root_hi = a;
      found = true;
      break;
    }
    prev_a = a;
    prev_f = f;
  }
  if (!found)
    throw NoRoot("A0+A1 does not change sign over [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]");

  double flo = total(root_lo);
  for (int i = 0; i < 100 && root_hi - root_lo > 1e-12; ++i) {
    const double mid = 0.5 * (root_lo + root_hi);
    const double fm = total(mid);
    if ((flo < 0) == (fm < 0)) {
      root_lo = mid;
      flo = fm;
    } else {
      root_hi = mid;
    }
  }
  ThresholdResult r;
  r.a_R = 0.5 * (root_lo + root_hi);
  // coefficient of the near-threshold law A0+A1 = slope*B*(a_R - a)
  const double h = 1e-5;
  r.slope = -(total(r.a_R + h) - total(r.a_R - h)) / (2.0 * h);
  BarrierParams q = p_without_a;
  q.a = r.a_R;
  const CriticalSet cs = find_extrema(q);
  r.x_b = cs.x_b;
  r.v_b = cs.v_b;
  return r;
}

}  // namespace wirebarrier
