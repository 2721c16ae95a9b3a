#include "wirebarrier/critical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wirebarrier/errors.hpp"

namespace wirebarrier {

namespace {

constexpr double kFoldMergeTol = 1e-5;

// bisection on a scalar function with a known sign change
template <typename F>
double bisect(const F& f, double lo, double hi, double tol = 1e-14) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// real roots of f on (0, v_hi] by dense scan + bisection
template <typename F>
std::vector<double> scan_roots(const F& f, double v_lo, double v_hi, int n) {
  std::vector<double> roots;
  double prev_v = v_lo, prev_f = f(v_lo);
  for (int i = 1; i <= n; ++i) {
    const double v = v_lo + (v_hi - v_lo) * double(i) / n;
    const double fv = f(v);
    if (std::isfinite(prev_f) && std::isfinite(fv) && (prev_f < 0) != (fv < 0))
      roots.push_back(bisect(f, prev_v, v));
    prev_v = v;
    prev_f = fv;
  }
  return roots;
}

// largest v with a representable alpha^2(iv)
double v_cap(const BarrierParams& p) {
  if (p.alpha0 == 0.0) return 20.0;
  // 2 v^2 / a^2 <= cap - margin
  return p.a * std::sqrt((kGaussianExpCap - 20.0) / 2.0);
}

Complex newton_fold(const SaddleGeometry& geom, Complex v0) {
  Complex v = v0;
  for (int it = 0; it < 80; ++it) {
    const Complex f = geom.dG(v);
    const Complex df = geom.d2G(v);
    if (std::abs(df) == 0.0) break;
    const Complex step = f / df;
    v -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(v))) return v;
  }
  throw NoConvergence("fold Newton did not converge from seed (" + std::to_string(v0.real()) +
                      "," + std::to_string(v0.imag()) + ")");
}

}  // namespace

CriticalSet find_extrema(const BarrierParams& p) {
  p.validate();
  CriticalSet cs;
  if (p.alpha0 == 0.0) {
    cs.v_a = cs.v_b = 2.0 * std::sqrt(p.gamma);
    cs.x_a = cs.x_b = 1.0;
    return cs;
  }
  SaddleGeometry geom{p, 0.0};
  auto fixed_point = [&](double v) {
    const double A = geom.A(v).real();
    return v - 2.0 * std::sqrt((1.0 + A) * (p.gamma + A));
  };
  const double vmax = v_cap(p);
  auto roots = scan_roots(fixed_point, 1e-9, vmax, 6000);
  if (roots.empty())
    throw NoRealRoot("no real fixed-point root of the extremum equation in (0, " +
                     std::to_string(vmax) + "]");
  cs.v_a = roots.front();
  cs.v_b = roots.back();
  cs.x_a = 1.0 + geom.A(cs.v_a).real();
  cs.x_b = 1.0 + geom.A(cs.v_b).real();
  return cs;
}

CriticalSet find_folds(const BarrierParams& p, double y) {
  p.validate();
  CriticalSet cs = find_extrema(p);
  SaddleGeometry geom{p, y};
  const double vmax = v_cap(p);

  if (y == 0.0) {
    auto slope = [&](double v) { return geom.dG(v).real(); };
    auto roots = scan_roots(slope, 1e-9, vmax, 6000);
    // discard the parabola top that coincides with the extremum b (alpha0=0 limit)
    if (p.alpha0 == 0.0)
      throw NoRealRoot("no fold pair: x(v) is a parabola whose single extremum is the point b");
    if (roots.size() >= 2) {
      cs.folds_real = true;
      cs.v_c1 = roots[0];
      cs.v_c2 = roots[1];
      cs.x_c1 = geom.G(roots[0]);
      cs.x_c2 = geom.G(roots[1]);
      if (std::abs(cs.v_c2 - cs.v_c1) < kFoldMergeTol)
        throw FoldsMerged("fold pair separated by " +
                          std::to_string(std::abs(cs.v_c2 - cs.v_c1)) + " at a = " +
                          std::to_string(p.a));
      return cs;
    }
  }

  // off the real axis: seed from the cubic model around the cusp
  const CriticalWidth cw = find_critical_width(p);
  if (std::abs(p.a - cw.a0) < 1e-6 * cw.a0)
    throw FoldsMerged("fold pair coincides at the cusp: a = " + std::to_string(p.a) +
                      " vs a0 = " + std::to_string(cw.a0));
  SaddleGeometry gc{p, y};
  double c3 = SaddleGeometry{{p.B, p.gamma, p.alpha0, cw.a0}, 0.0}.d3G_real(cw.v0) / 6.0;
  double c_av = -SaddleGeometry{{p.B, p.gamma, p.alpha0, cw.a0}, 0.0}.dGdv_da_real(cw.v0);
  Complex delta_sq = Complex(c_av * (p.a - cw.a0) / (3.0 * c3), 0.0);
  Complex delta = std::sqrt(delta_sq);
  Complex c1 = newton_fold(gc, Complex(cw.v0, 0.0) - delta);
  Complex c2 = newton_fold(gc, Complex(cw.v0, 0.0) + delta);
  if (std::abs(c1 - c2) < kFoldMergeTol)
    throw FoldsMerged("fold pair separated by " + std::to_string(std::abs(c1 - c2)) +
                      " at a = " + std::to_string(p.a));
  cs.folds_real = std::abs(c1.imag()) < 1e-10 && std::abs(c2.imag()) < 1e-10;
  // order by x: c1 has the larger Re x
  Complex x1 = gc.G(c1), x2 = gc.G(c2);
  if (x1.real() < x2.real()) {
    std::swap(c1, c2);
    std::swap(x1, x2);
  }
  cs.v_c1 = c1;
  cs.v_c2 = c2;
  cs.x_c1 = x1;
  cs.x_c2 = x2;
  return cs;
}

CriticalWidth find_critical_width(const BarrierParams& p) {
  p.validate();
  if (p.alpha0 == 0.0)
    throw NoConvergence(
        "critical width diverges at alpha0 = 0: the curve has no fold structure");

  // bracket a0 by the disappearance of the real fold pair
  auto fold_count = [&](double a) {
    BarrierParams q = p;
    q.a = a;
    SaddleGeometry geom{q, 0.0};
    auto slope = [&](double v) { return geom.dG(v).real(); };
    return scan_roots(slope, 1e-9, v_cap(q), 2000).size();
  };
  double a_hi = p.a;
  int tries = 0;
  while (fold_count(a_hi) < 2 && tries++ < 60) a_hi *= 1.25;
  if (tries >= 60) throw NoConvergence("no two-fold regime found while scanning widths upward");
  double a_lo = a_hi;
  tries = 0;
  while (fold_count(a_lo) >= 2 && tries++ < 200) a_lo *= 0.97;
  if (tries >= 200) throw NoConvergence("no fold-free regime found while scanning widths down");

  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (a_lo + a_hi);
    (fold_count(mid) >= 2 ? a_hi : a_lo) = mid;
  }
  double a = 0.5 * (a_lo + a_hi);
  BarrierParams q = p;
  q.a = a;
  SaddleGeometry geom{q, 0.0};
  auto slope = [&](double v) { return geom.dG(v).real(); };
  auto roots = scan_roots(slope, 1e-9, v_cap(q), 4000);
  double v = roots.size() >= 2 ? 0.5 * (roots[0] + roots[1])
                               : (roots.size() == 1 ? roots[0] : 1.0);

  // Newton on (dG, d2G)(v, a) = 0
  for (int it = 0; it < 60; ++it) {
    BarrierParams r = p;
    r.a = a;
    SaddleGeometry g{r, 0.0};
    const double f1 = g.dG(v).real();
    const double f2 = g.d2G(v).real();
    const double j11 = f2;
    const double j12 = g.dGdv_da_real(v);
    const double j21 = g.d3G_real(v);
    const double j22 = g.d2Gdv2_da_real(v);
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0) throw NoConvergence("singular Jacobian in the cusp Newton");
    const double dv = (f1 * j22 - f2 * j12) / det;
    const double da = (f2 * j11 - f1 * j21) / det;
    v -= dv;
    a -= da;
    if (std::abs(dv) + std::abs(da) < 1e-14 * std::max(1.0, std::abs(a))) {
      BarrierParams s = p;
      s.a = a;
      return {a, SaddleGeometry{s, 0.0}.G(v).real(), v};
    }
  }
  throw NoConvergence("cusp Newton did not converge (alpha0 = " + std::to_string(p.alpha0) +
                      ")");
}

SingularExpansion unfold_cubic(const BarrierParams& p, double window_frac) {
  const CriticalWidth cw = find_critical_width(p);
  if (std::abs(p.a - cw.a0) > window_frac * cw.a0)
    throw WindowViolation("width a = " + std::to_string(p.a) + " outside |a-a0| <= " +
                          std::to_string(window_frac) + "*a0, a0 = " + std::to_string(cw.a0));

  BarrierParams pc = p;
  pc.a = cw.a0;
  SaddleGeometry g{pc, 0.0};
  SingularExpansion se;
  se.cusp = cw;
  se.a = p.a;
  se.c_lin_y = -g.dG_ds(cw.v0).real();
  se.c_cubic = g.d3G_real(cw.v0) / 6.0;
  se.c_lin_av = -g.dGdv_da_real(cw.v0);
  se.delta_coeff = std::sqrt(se.c_lin_av / (3.0 * se.c_cubic));
  se.D_coeff = 2.0 * se.c_cubic * se.delta_coeff * se.delta_coeff * se.delta_coeff / se.c_lin_y;
  se.x_drift = g.dG_da(cw.v0).real();
  se.tan_theta = se.c_lin_y;
  se.theta_deg = std::atan(se.tan_theta) * 180.0 / M_PI;

  const double da = p.a - cw.a0;
  se.delta = se.delta_coeff * std::sqrt(std::abs(da));
  se.Delta = se.D_coeff * std::pow(std::abs(da), 1.5);
  const double x_center = cw.x0 + se.x_drift * da;
  const double dx_fold = 2.0 * se.c_cubic * se.delta * se.delta * se.delta;  // = c_lin_y*Delta
  if (da >= 0.0) {
    se.sing_x1 = x_center + dx_fold;
    se.sing_y1 = 0.0;
    se.sing_x2 = x_center - dx_fold;
    se.sing_y2 = 0.0;
  } else {
    se.sing_x1 = x_center;
    se.sing_y1 = se.Delta;
    se.sing_x2 = x_center;
    se.sing_y2 = -se.Delta;
  }
  se.literal_y_offset = 0.24 * se.Delta;
  return se;
}

ActionExpansion action_expansion_coeffs(const BarrierParams& p, double window_frac) {
  const CriticalWidth cw = find_critical_width(p);
  if (std::abs(p.a - cw.a0) > window_frac * cw.a0)
    throw WindowViolation("width a = " + std::to_string(p.a) + " outside the near-critical window");

  BarrierParams pc = p;
  pc.a = cw.a0;
  SaddleGeometry g{pc, 0.0};
  const double A0v = g.A(cw.v0).real();
  const double f0 = std::sqrt(1.0 + A0v - cw.x0);
  const double dA = g.dA(cw.v0).real();
  const double c3 = g.d3G_real(cw.v0) / 6.0;

  ActionExpansion ae;
  ae.slope_const = f0;
  ae.slope_dv = dA / (2.0 * f0);  // dx/dv = 0 at the cusp
  ae.slope_lin_reduced = ae.slope_dv / (3.0 * c3);
  ae.quartic_reduced = ae.slope_dv / 4.0;
  return ae;
}

StokesLineSet trace_stokes_lines_2d(const BarrierParams& p, double trace_radius) {
  const CriticalWidth cw = find_critical_width(p);
  if (p.a >= cw.a0)
    throw WindowViolation("2d Stokes geometry requires a < a0 = " + std::to_string(cw.a0));
  const double delta = std::sqrt((cw.a0 - p.a)) *
                       unfold_cubic(BarrierParams{p.B, p.gamma, p.alpha0, p.a}).delta_coeff;

  auto Phi = [&](Complex W) { return W * W * W * (W + Complex(0.0, 8.0 / 3.0) * delta); };
  auto dPhi = [&](Complex W) {
    return 4.0 * W * W * W + Complex(0.0, 8.0) * delta * W * W;
  };

  StokesLineSet out;
  out.origin = Complex(cw.v0, delta);
  const double r0 = 1e-4 * std::max(delta, 1e-6);
  const double Rmax = trace_radius > 0 ? trace_radius : std::max(1.0, 20.0 * delta);

  for (int ray = 0; ray < 6; ++ray) {
    const double theta = M_PI / 6.0 + ray * M_PI / 3.0;  // cubic-term ray angles
    Complex W = std::polar(r0, theta);
    std::vector<Complex> line;
    line.push_back(out.origin);  // W = 0
    double h = r0;
    Complex dir = std::polar(1.0, theta);
    double worst = 0.0;
    int stalls = 0;
    while (std::abs(W) < Rmax && line.size() < 20000) {
      // predictor along the tangent of Im Phi = 0
      Complex g = dPhi(W);
      if (std::abs(g) == 0.0) break;
      Complex T = std::conj(g) / std::abs(g);
      if ((T.real() * dir.real() + T.imag() * dir.imag()) < 0.0) T = -T;
      Complex Wn = W + h * T;
      // corrector: Newton transverse to the line
      bool ok = false;
      for (int it = 0; it < 6; ++it) {
        const Complex val = Phi(Wn);
        const Complex gp = dPhi(Wn);
        if (std::abs(gp) == 0.0) break;
        const Complex n = Complex(0, 1) * std::conj(gp) / std::abs(gp);
        const double denom = (n * gp).imag();
        if (denom == 0.0) break;
        const double corr = -val.imag() / denom;
        Wn += corr * n;
        if (std::abs(corr) < 1e-13 * std::max(1.0, std::abs(Wn))) {
          ok = true;
          break;
        }
      }
      if (!ok || std::abs(Wn - W) > 4.0 * h) {
        h *= 0.5;
        if (++stalls > 60 || h < 1e-15)
          throw TracerStall("2d Stokes tracer stalled at |W| = " + std::to_string(std::abs(W)));
        continue;
      }
      stalls = 0;
      dir = (Wn - W) / std::abs(Wn - W);
      W = Wn;
      const Complex val = Phi(W);
      worst = std::max(worst, std::abs(val.imag()) / std::max(std::abs(val.real()), 1e-30));
      line.push_back(out.origin + W);  // store in the v plane
      h = std::min(h * 1.6, 0.02 * std::max(std::abs(W), delta));
    }
    out.lines.push_back(std::move(line));
    out.im_residuals.push_back(worst);
  }
  return out;
}

std::vector<CausticTrajectory> caustic_trajectories(const BarrierParams& p,
                                                    const std::vector<double>& b_values,
                                                    int samples_per_curve) {
  const SingularExpansion se = unfold_cubic(p, 1.0);  // cusp data only; window not binding here
  const double t = se.tan_theta;
  const double x0 = se.cusp.x0;
  const double g1 = p.gamma - 1.0;

  std::vector<CausticTrajectory> out;
  out.reserve(b_values.size());
  for (double b : b_values) {
    CausticTrajectory c;
    c.b = b;
    const double x_vertex = (x0 + (1.0 - p.gamma) * t * t + b * t) / (1.0 + t * t);
    const double denom = 4.0 * (x0 - 1.0 + p.gamma + b * t);
    c.eta_tangent = b - 2.0 * t * (x_vertex + g1);
    // sample around the tangency point
    const double span = 2.0 * std::max(0.2, std::abs(c.eta_tangent - b) * 2.0);
    for (int i = 0; i < samples_per_curve; ++i) {
      const double eta = c.eta_tangent - span / 2 + span * double(i) / (samples_per_curve - 1);
      const double x = x_vertex - (1.0 + t * t) * (eta - b) * (eta - b) / denom;
      c.eta.push_back(eta);
      c.x.push_back(x);
    }
    c.x_tangent =
        x_vertex - (1.0 + t * t) * (c.eta_tangent - b) * (c.eta_tangent - b) / denom;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace wirebarrier
