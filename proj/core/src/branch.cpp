#include "wirebarrier/branch.hpp"

#include <algorithm>
#include <cmath>

#include "wirebarrier/errors.hpp"

namespace wirebarrier {

namespace {

BranchSample make_sample(const BarrierParams& p, Complex y, Complex v, SqrtBranch& br) {
  const ComplexAction act = action((SaddleGeometry{p, y.real()}.G(v, br)).real(), y, p, v, &br);
  BranchSample s;
  s.v = v;
  s.sigma = act.sigma;
  s.log_psi_mag = -p.B * act.sigma.imag();
  if (!std::isfinite(s.log_psi_mag))
    throw SolverFailure("non-finite |psi| sample at v = (" + std::to_string(v.real()) + "," +
                        std::to_string(v.imag()) + ")");
  return s;
}

// sample the real-v curve at y = 0 between v_lo and v_hi (inclusive)
void sample_real_segment(const BarrierParams& p, double v_lo, double v_hi, int n,
                         BranchCurve& out) {
  SaddleGeometry geom{p, 0.0};
  SqrtBranch br;
  for (int i = 0; i <= n; ++i) {
    const double v = v_lo + (v_hi - v_lo) * double(i) / n;
    BranchSample s = make_sample(p, Complex(0, 0), Complex(v, 0.0), br);
    s.x = geom.G(Complex(v, 0.0), br).real();
    out.samples.push_back(s);
  }
  out.sheet_q = br.sheet_q();
}

// real v solving G(v) = x by bisection on a monotone segment
double v_at_x(const SaddleGeometry& geom, double x, double v_lo, double v_hi) {
  auto f = [&](double v) { return geom.G(Complex(v, 0.0)).real() - x; };
  double flo = f(v_lo), fhi = f(v_hi);
  if ((flo < 0) == (fhi < 0)) return std::abs(flo) < std::abs(fhi) ? v_lo : v_hi;
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (v_lo + v_hi);
    const double fm = f(mid);
    if ((flo < 0) == (fm < 0)) {
      v_lo = mid;
      flo = fm;
    } else {
      v_hi = mid;
    }
  }
  return 0.5 * (v_lo + v_hi);
}

// complex-v continuation of the dashed twin past a fold at y = 0; returns the
// +Im v twin samples (x beyond the fold extremum), with sigma continued from
// the fold value
std::vector<BranchSample> fold_extension(const BarrierParams& p, double v_c, double x_c,
                                         bool x_increasing, double length, int n) {
  SaddleGeometry geom{p, 0.0};
  const double g2 = geom.d2G(Complex(v_c, 0.0)).real();
  std::vector<BranchSample> out;
  if (g2 == 0.0 || n < 1) return out;
  SqrtBranch br;
  geom.G(Complex(v_c, 0.0), br);  // anchor the branch state on the real curve
  Complex v = Complex(v_c, 0.0);
  for (int i = 1; i <= n; ++i) {
    const double dx = length * double(i) / n * (x_increasing ? 1.0 : -1.0);
    const double x = x_c + dx;
    // quadratic-model predictor for the first step, then continuity
    Complex vv = v;
    if (i == 1) {
      vv = Complex(v_c, 0.0) + std::sqrt(Complex(2.0 * dx / g2, 0.0));
      if (vv.imag() < 0.0) vv = Complex(v_c, 0.0) - std::sqrt(Complex(2.0 * dx / g2, 0.0));
    }
    SqrtBranch trial = br;
    for (int it = 0; it < 60; ++it) {
      SqrtBranch tb = br;
      const Complex g = geom.G(vv, tb);
      const Complex dg = geom.dG(vv, tb);
      const Complex step = (g - x) / dg;
      vv -= step;
      trial = tb;
      if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(vv))) break;
    }
    br = trial;
    v = vv;
    BranchSample s = make_sample(p, Complex(0, 0), v, br);
    s.x = x;
    out.push_back(s);
  }
  return out;
}

// mirror twin: sigma increments conjugated around the fold anchor
std::vector<BranchSample> mirror_twin(const std::vector<BranchSample>& twin, Complex sigma_c,
                                      double B) {
  std::vector<BranchSample> out = twin;
  for (auto& s : out) {
    s.v = std::conj(s.v);
    s.sigma = sigma_c + std::conj(s.sigma - sigma_c);
    s.log_psi_mag = -B * s.sigma.imag();
  }
  return out;
}

Complex sigma_at_real_v(const BarrierParams& p, double v) {
  SqrtBranch br;
  SaddleGeometry geom{p, 0.0};
  const double x = geom.G(Complex(v, 0.0), br).real();
  return action(x, Complex(0, 0), p, Complex(v, 0.0), &br).sigma;
}

// arclength continuation of Im G(v) = 0 at y != 0, from a seed, in one
// direction; stops when x leaves [x_min, x_max] moving outward or after
// max_samples. Walks straight through fold points (saddles of Im G).
std::vector<BranchSample> march(const BarrierParams& p, double y, Complex v0, Complex dir0,
                                const TraceOptions& opt) {
  SaddleGeometry geom{p, y};
  std::vector<BranchSample> out;
  SqrtBranch br;
  Complex v = v0;
  Complex dir = dir0 / std::abs(dir0);
  double h = opt.ds0;
  int stalls = 0;

  SqrtBranch br0 = br;
  geom.G(v, br0);
  br = br0;
  {
    BranchSample s = make_sample(p, Complex(y, 0), v, br);
    s.x = geom.G(v, br).real();
    out.push_back(s);
  }

  while (int(out.size()) < opt.max_samples) {
    SqrtBranch btry = br;
    Complex g = geom.dG(v, btry);
    Complex vn;
    bool through_fold = false;
    if (std::abs(g) < 100.0 * kFoldThreshold) {
      // saddle of Im G: continue straight through
      vn = v + 2.0 * h * dir;
      through_fold = true;
    } else {
      Complex T = std::conj(g) / std::abs(g);
      if ((T.real() * dir.real() + T.imag() * dir.imag()) < 0.0) T = -T;
      vn = v + h * T;
    }
    // corrector
    SqrtBranch bn = br;
    bool ok = through_fold;
    if (!through_fold) {
      for (int it = 0; it < 8; ++it) {
        SqrtBranch bt = br;
        const Complex val = geom.G(vn, bt);
        const Complex gp = geom.dG(vn, bt);
        if (std::abs(gp) == 0.0) break;
        const Complex nvec = Complex(0, 1) * std::conj(gp) / std::abs(gp);
        const double denom = (nvec * gp).imag();
        if (denom == 0.0) break;
        const double corr = -val.imag() / denom;
        vn += corr * nvec;
        bn = bt;
        if (std::abs(corr) < 1e-12 * std::max(1.0, std::abs(vn))) {
          ok = true;
          break;
        }
      }
    } else {
      geom.G(vn, bn);
    }
    if (!ok || std::abs(vn - v) > 5.0 * h) {
      h *= 0.5;
      if (h < opt.ds_floor || ++stalls > 80)
        throw StepCollapse("branch tracer step collapsed at v = (" + std::to_string(v.real()) +
                           "," + std::to_string(v.imag()) + ")");
      continue;
    }
    stalls = 0;
    dir = (vn - v) / std::abs(vn - v);
    v = vn;
    br = bn;
    BranchSample s = make_sample(p, Complex(y, 0), v, br);
    SqrtBranch bx = br;
    s.x = geom.G(v, bx).real();
    out.push_back(s);
    if (!through_fold) h = std::min(h * 1.4, opt.ds0);

    const double x = s.x;
    const double dxdl = (out.size() >= 2) ? x - out[out.size() - 2].x : 0.0;
    if ((x > opt.x_max && dxdl > 0) || (x < opt.x_min && dxdl < 0)) break;
  }
  return out;
}

}  // namespace

BranchCurve trace_branch(double y, const BarrierParams& p, const SaddlePoint& seed,
                         const TraceOptions& opt) {
  p.validate();
  BranchCurve c;
  c.y = y;
  if (std::abs(seed.residual) > std::max(opt.seed_tolerance, kRootTol * 100))
    throw DomainError("trace seed residual " + std::to_string(seed.residual) +
                      " exceeds the seed tolerance");
  if (y == 0.0 && std::abs(seed.v.imag()) < 1e-14) {
    SaddleGeometry geom{p, 0.0};
    const double vcap = p.alpha0 > 0
                            ? p.a * std::sqrt((kGaussianExpCap - 20.0) / 2.0)
                            : 4.0 * std::sqrt(p.gamma) + 2.0;
    const double v_end = v_at_x(geom, opt.x_max, seed.v.real(), vcap);
    sample_real_segment(p, seed.v.real(), v_end, opt.max_samples > 2 ? 200 : 2, c);
    return c;
  }
  auto fwd = march(p, y, seed.v, Complex(1.0, 0.0), opt);
  auto bwd = march(p, y, seed.v, Complex(-1.0, 0.0), opt);
  std::reverse(bwd.begin(), bwd.end());
  if (!bwd.empty()) bwd.pop_back();  // drop the duplicated seed
  c.samples = std::move(bwd);
  c.samples.insert(c.samples.end(), fwd.begin(), fwd.end());
  if (c.samples.size() > 1 && c.samples.front().x > c.samples.back().x)
    std::reverse(c.samples.begin(), c.samples.end());
  while (!c.samples.empty() &&
         (c.samples.front().x < opt.x_min - 1e-9 || c.samples.front().x > opt.x_max + 1e-9))
    c.samples.erase(c.samples.begin());
  while (!c.samples.empty() &&
         (c.samples.back().x < opt.x_min - 1e-9 || c.samples.back().x > opt.x_max + 1e-9))
    c.samples.pop_back();
  return c;
}

std::vector<BranchCurve> branches_at(const BarrierParams& p, double y, const TraceOptions& opt) {
  p.validate();
  std::vector<BranchCurve> out;
  SaddleGeometry geom{p, y};
  const int n = 160;

  if (y == 0.0) {
    if (p.alpha0 == 0.0) {
      // parabola: branches 1 and 2 meet at the top x = 1
      const double vtop = 2.0 * std::sqrt(p.gamma);
      const double v0 = v_at_x(geom, std::max(opt.x_min, 0.0), 0.0, vtop);
      const double v1 = v_at_x(geom, std::max(opt.x_min, 0.0), vtop, 2.0 * vtop);
      BranchCurve b1, b2;
      b1.y = b2.y = 0.0;
      b1.label = "1";
      b2.label = "2";
      sample_real_segment(p, v0, vtop, n, b1);
      sample_real_segment(p, vtop, v1, n, b2);
      out.push_back(std::move(b1));
      out.push_back(std::move(b2));
      return out;
    }
    const CriticalWidth cw = find_critical_width(p);
    if (p.a > cw.a0) {
      const CriticalSet cs = find_folds(p, 0.0);
      const double vc1 = cs.v_c1.real(), vc2 = cs.v_c2.real();
      const double xc1 = cs.x_c1.real(), xc2 = cs.x_c2.real();
      BranchCurve b1, b2, b3;
      b1.y = b2.y = b3.y = 0.0;
      b1.label = "1";
      b2.label = "2";
      b3.label = "3";
      const double v_start = v_at_x(geom, std::max(opt.x_min, 0.0), 0.0, vc1);
      sample_real_segment(p, v_start, vc1, n, b1);
      sample_real_segment(p, vc1, vc2, n, b2);
      const double vcap = p.a * std::sqrt((kGaussianExpCap - 20.0) / 2.0);
      const double v_end = v_at_x(geom, opt.x_max, vc2, vcap);
      sample_real_segment(p, vc2, v_end, n, b3);
      if (opt.extend_past_folds) {
        const int ne = std::max(8, n / 4);
        const Complex s_c1 = sigma_at_real_v(p, vc1);
        const Complex s_c2 = sigma_at_real_v(p, vc2);
        auto up = fold_extension(p, vc1, xc1, true, opt.extension_length, ne);
        auto dn = fold_extension(p, vc2, xc2, false, opt.extension_length, ne);
        auto up_m = mirror_twin(up, s_c1, p.B);
        auto dn_m = mirror_twin(dn, s_c2, p.B);
        // +Im v twin continues the smaller-v branch
        b1.samples.insert(b1.samples.end(), up.begin(), up.end());
        b2.samples.insert(b2.samples.end(), up_m.begin(), up_m.end());
        b3.samples.insert(b3.samples.begin(), dn.rbegin(), dn.rend());
        b2.samples.insert(b2.samples.begin(), dn_m.rbegin(), dn_m.rend());
      }
      out.push_back(std::move(b1));
      out.push_back(std::move(b2));
      out.push_back(std::move(b3));
      return out;
    }
    // a < a0: single real curve plus the detached complex pair
    BranchCurve real_curve;
    real_curve.y = 0.0;
    real_curve.label = "1-3";
    const double vcap = p.a * std::sqrt((kGaussianExpCap - 20.0) / 2.0);
    const double v_start = v_at_x(geom, std::max(opt.x_min, 0.0), 0.0, vcap);
    const double v_end = v_at_x(geom, opt.x_max, v_start, vcap);
    sample_real_segment(p, v_start, v_end, n, real_curve);
    out.push_back(std::move(real_curve));

    const SingularExpansion se = unfold_cubic(p, 1.0);
    const double tstar =
        std::sqrt(se.c_lin_av * (cw.a0 - p.a) / se.c_cubic);  // detached-curve offset
    BranchCurve twin_hi, twin_lo;
    twin_hi.y = twin_lo.y = 0.0;
    Complex v_seed(cw.v0, tstar);
    {
      // land the cubic-model seed exactly on the detached curve: Newton on
      // G(v) = Re G(seed)
      SqrtBranch bt;
      const double x_target = geom.G(v_seed, bt).real();
      for (int it = 0; it < 60; ++it) {
        SqrtBranch tb;
        const Complex g = geom.G(v_seed, tb);
        const Complex dg = geom.dG(v_seed, tb);
        const Complex step = (g - x_target) / dg;
        v_seed -= step;
        if (std::abs(step) < 1e-13) break;
      }
    }
    SqrtBranch br_seed;
    const double x_seed = geom.G(v_seed, br_seed).real();
    auto continue_in_x = [&](double x_from, double x_to, Complex v_from) {
      std::vector<BranchSample> seg;
      SqrtBranch state;
      geom.G(v_from, state);
      Complex v = v_from;
      const int m = n / 2;
      for (int i = 1; i <= m; ++i) {
        const double x = x_from + (x_to - x_from) * double(i) / m;
        for (int it = 0; it < 60; ++it) {
          SqrtBranch bt = state;
          const Complex g = geom.G(v, bt);
          const Complex dg = geom.dG(v, bt);
          const Complex step = (g - x) / dg;
          v -= step;
          if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(v))) {
            state = bt;
            break;
          }
        }
        BranchSample s = make_sample(p, Complex(0, 0), v, state);
        s.x = x;
        seg.push_back(s);
      }
      return seg;
    };
    auto left = continue_in_x(x_seed, std::max(opt.x_min, 0.02), v_seed);
    auto right = continue_in_x(x_seed, opt.x_max, v_seed);
    std::reverse(left.begin(), left.end());
    twin_hi.samples = std::move(left);
    {
      SqrtBranch bt;
      BranchSample s = make_sample(p, Complex(0, 0), v_seed, bt);
      s.x = x_seed;
      twin_hi.samples.push_back(s);
    }
    twin_hi.samples.insert(twin_hi.samples.end(), right.begin(), right.end());
    // the conjugate partner mirrors sigma around the (real) seed anchor value
    twin_lo.samples = twin_hi.samples;
    for (auto& s : twin_lo.samples) {
      s.v = std::conj(s.v);
      s.sigma = std::conj(s.sigma);
      s.log_psi_mag = -p.B * s.sigma.imag();
    }
    double mean_hi = 0.0;
    for (auto& s : twin_hi.samples) mean_hi += s.log_psi_mag;
    const bool hi_dominant = mean_hi > 0.0;
    twin_hi.label = hi_dominant ? "3-1" : "2-2";
    twin_lo.label = hi_dominant ? "2-2" : "3-1";
    out.push_back(std::move(twin_hi));
    out.push_back(std::move(twin_lo));
    return out;
  }

  // y != 0: labels depend on the regime relative to the pierce offset Delta
  std::string l1 = "1", l2 = "2", l3 = "3";
  if (p.alpha0 > 0.0) {
    const CriticalWidth cw = find_critical_width(p);
    if (p.a < cw.a0) {
      const SingularExpansion se = unfold_cubic(p, 1.0);
      const double ay = std::abs(y);
      if (ay < 0.8 * se.Delta) {
        l1 = "1-3";
        l2 = "2-2";
        l3 = "3-1";
      } else if (ay <= 1.2 * se.Delta) {
        l1 = "1-1";
        l2 = "2-2";
        l3 = "3-3";
      }
    }
  }

  // branch 1(+2): from the wire edge
  const SaddlePoint seed1 = solve_saddle(std::max(opt.x_min, 1e-6), Complex(y, 0.0), p,
                                         Complex(0.0, -y));
  BranchCurve c12 = trace_branch(y, p, seed1, opt);
  // split at the x maximum into the rising (1) and returning (2) parts
  size_t imax = 0;
  for (size_t i = 0; i < c12.samples.size(); ++i)
    if (c12.samples[i].x > c12.samples[imax].x) imax = i;
  BranchCurve b1, b2;
  b1.y = b2.y = y;
  b1.label = l1;
  b2.label = l2;
  // orient so the curve starts at small x
  if (!c12.samples.empty() && c12.samples.front().x > c12.samples.back().x)
    std::reverse(c12.samples.begin(), c12.samples.end());
  for (size_t i = 0; i < c12.samples.size(); ++i)
    if (c12.samples[i].x > c12.samples[imax].x) imax = i;
  b1.samples.assign(c12.samples.begin(), c12.samples.begin() + imax + 1);
  b2.samples.assign(c12.samples.begin() + imax, c12.samples.end());
  out.push_back(std::move(b1));
  if (b2.samples.size() > 1) {
    out.push_back(std::move(b2));
  } else {
    // the wire-edge curve ran through without returning: seed the
    // subdominant root s = 2 sqrt(Q)(sqrt(P) + sqrt(P-x)) explicitly
    const double aly = std::abs(alpha(Complex(y, 0), p));
    const double P = 1.0 + aly * aly, Q = p.gamma + aly * aly;
    const double x_seed = std::max(opt.x_min, 1e-6);
    const Complex s2 = 2.0 * std::sqrt(Q) * (std::sqrt(P) + std::sqrt(P - x_seed));
    try {
      const SaddlePoint seed2 = solve_saddle(x_seed, Complex(y, 0.0), p, s2 - Complex(0, y));
      BranchCurve bc2 = trace_branch(y, p, seed2, opt);
      bc2.label = l2;
      if (bc2.samples.size() > 1) out.push_back(std::move(bc2));
    } catch (const SolverError&) {
      // subdominant start not reachable at these parameters
    }
  }

  // branch 3: seeded on the classical trajectory where v = v_b exactly
  try {
    const CriticalSet cs = find_extrema(p);
    const double x_traj = cs.x_b + y * y / (4.0 * (cs.x_b - 1.0 + p.gamma));
    if (x_traj < opt.x_max) {
      SaddlePoint seed3{x_traj, Complex(y, 0.0), Complex(cs.v_b, 0.0), 0.0, 0};
      BranchCurve b3 = trace_branch(y, p, seed3, opt);
      b3.label = l3;
      out.push_back(std::move(b3));
    }
  } catch (const SolverError&) {
    // no extremum structure: homogeneous-like regime, branch 3 out of window
  }
  return out;
}

double log_psi(double x, const BarrierParams& p, const BranchCurve& branch) {
  (void)p;
  for (size_t i = 0; i + 1 < branch.samples.size(); ++i) {
    const double x0 = branch.samples[i].x, x1 = branch.samples[i + 1].x;
    if ((x >= std::min(x0, x1) && x <= std::max(x0, x1)) && x0 != x1) {
      const double t = (x - x0) / (x1 - x0);
      return branch.samples[i].log_psi_mag +
             t * (branch.samples[i + 1].log_psi_mag - branch.samples[i].log_psi_mag);
    }
  }
  throw OutOfRange("x = " + std::to_string(x) + " outside the sampled branch range");
}

}  // namespace wirebarrier
