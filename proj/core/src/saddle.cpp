#include "wirebarrier/saddle.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "wirebarrier/errors.hpp"
#include "wirebarrier/quadrature.hpp"

namespace wirebarrier {

namespace {

// alpha^2(iv) with complex width, for complex-step derivatives in a.
Complex A_general(Complex v, Complex a, double alpha0_sq) {
  if (alpha0_sq == 0.0) return {0.0, 0.0};
  const Complex e = 2.0 * v * v / (a * a);
  if (std::abs(e.real()) > kGaussianExpCap)
    throw OutOfRange("saddle: Gaussian exponent " + std::to_string(e.real()) + " exceeds cap " +
                     std::to_string(kGaussianExpCap));
  return alpha0_sq * std::exp(e);
}

struct Gderivs {
  Complex G, dG, d2G;
};

// G and its first two v-derivatives with principal square roots. s = v + iy.
Gderivs G_principal(Complex v, Complex a, double gamma, double alpha0_sq, Complex iy) {
  const Complex A = A_general(v, a, alpha0_sq);
  const Complex dA = 4.0 * v * A / (a * a);
  const Complex d2A = (4.0 / (a * a)) * (A + v * dA);
  const Complex s = v + iy;
  const Complex p = std::sqrt(1.0 + A);
  const Complex q = std::sqrt(gamma + A);
  const Complex q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const Complex gm1 = gamma - 1.0;

  const Complex G = s * p / q - s * s / (4.0 * q2);
  const Complex dG_ds = p / q - s / (2.0 * q2);
  const Complex dG_dA = s * gm1 / (2.0 * p * q3) + s * s / (4.0 * q4);
  const Complex dG = dG_ds + dA * dG_dA;

  const Complex dv_dG_ds = -1.0 / (2.0 * q2) + dA * (gm1 / (2.0 * p * q3) + s / (2.0 * q4));
  const Complex ds_dG_dA = gm1 / (2.0 * p * q3) + s / (2.0 * q4);
  const Complex dA_dG_dA =
      -s * gm1 * (1.0 / (4.0 * p * p * p * q3) + 3.0 / (4.0 * p * q4 * q)) -
      s * s / (2.0 * q4 * q2);
  const Complex d2G = dv_dG_ds + d2A * dG_dA + dA * (ds_dG_dA + dA * dA_dG_dA);
  return {G, dG, d2G};
}

constexpr double kCstep = 1e-100;

}  // namespace

void SqrtBranch::update(Complex A, double gamma) {
  const Complex pp = std::sqrt(1.0 + A);
  const Complex qp = std::sqrt(gamma + A);
  if (fresh) {
    p = pp;
    q = qp;
    fresh = false;
    return;
  }
  p = (std::abs(pp - p) <= std::abs(pp + p)) ? pp : -pp;
  q = (std::abs(qp - q) <= std::abs(qp + q)) ? qp : -qp;
}

int SqrtBranch::sheet_p() const {
  const Complex pr = std::sqrt(p * p);
  return std::abs(pr - p) <= std::abs(pr + p) ? +1 : -1;
}

int SqrtBranch::sheet_q() const {
  const Complex qr = std::sqrt(q * q);
  return std::abs(qr - q) <= std::abs(qr + q) ? +1 : -1;
}

Complex SaddleGeometry::A(Complex v) const { return A_general(v, params.a, params.alpha0_sq()); }

Complex SaddleGeometry::dA(Complex v) const { return 4.0 * v * A(v) / (params.a * params.a); }

Complex SaddleGeometry::G(Complex v) const {
  return G_principal(v, params.a, params.gamma, params.alpha0_sq(), Complex(0.0, y)).G;
}

Complex SaddleGeometry::dG(Complex v) const {
  return G_principal(v, params.a, params.gamma, params.alpha0_sq(), Complex(0.0, y)).dG;
}

Complex SaddleGeometry::d2G(Complex v) const {
  return G_principal(v, params.a, params.gamma, params.alpha0_sq(), Complex(0.0, y)).d2G;
}

namespace {

Gderivs G_branched(const SaddleGeometry& g, Complex v, SqrtBranch& br) {
  const Complex A = g.A(v);
  const Complex dA = g.dA(v);
  const Complex d2A = (4.0 / (g.params.a * g.params.a)) * (A + v * dA);
  br.update(A, g.params.gamma);
  const Complex s = v + Complex(0.0, g.y);
  const Complex p = br.p, q = br.q;
  const Complex q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const Complex gm1 = g.params.gamma - 1.0;
  const Complex G = s * p / q - s * s / (4.0 * q2);
  const Complex dG_ds = p / q - s / (2.0 * q2);
  const Complex dG_dA = s * gm1 / (2.0 * p * q3) + s * s / (4.0 * q4);
  const Complex dG = dG_ds + dA * dG_dA;
  const Complex dv_dG_ds = -1.0 / (2.0 * q2) + dA * (gm1 / (2.0 * p * q3) + s / (2.0 * q4));
  const Complex ds_dG_dA = gm1 / (2.0 * p * q3) + s / (2.0 * q4);
  const Complex dA_dG_dA =
      -s * gm1 * (1.0 / (4.0 * p * p * p * q3) + 3.0 / (4.0 * p * q4 * q)) -
      s * s / (2.0 * q4 * q2);
  const Complex d2G = dv_dG_ds + d2A * dG_dA + dA * (ds_dG_dA + dA * dA_dG_dA);
  return {G, dG, d2G};
}

}  // namespace

Complex SaddleGeometry::G(Complex v, SqrtBranch& br) const { return G_branched(*this, v, br).G; }
Complex SaddleGeometry::dG(Complex v, SqrtBranch& br) const { return G_branched(*this, v, br).dG; }
Complex SaddleGeometry::d2G(Complex v, SqrtBranch& br) const {
  return G_branched(*this, v, br).d2G;
}

Complex SaddleGeometry::dG_ds(Complex v) const {
  const Complex Av = A(v);
  const Complex s = v + Complex(0.0, y);
  const Complex p = std::sqrt(1.0 + Av);
  const Complex q = std::sqrt(params.gamma + Av);
  return p / q - s / (2.0 * q * q);
}

Complex SaddleGeometry::dG_da(Complex v) const {
  const Complex Av = A(v);
  const Complex dA_da = -4.0 * v * v * Av / (params.a * params.a * params.a);
  const Complex s = v + Complex(0.0, y);
  const Complex p = std::sqrt(1.0 + Av);
  const Complex q = std::sqrt(params.gamma + Av);
  const Complex q3 = q * q * q, q4 = q3 * q;
  return dA_da * (s * (params.gamma - 1.0) / (2.0 * p * q3) + s * s / (4.0 * q4));
}

double SaddleGeometry::d3G_real(double v) const {
  const Gderivs g = G_principal(Complex(v, kCstep), params.a, params.gamma, params.alpha0_sq(),
                                Complex(0.0, y));
  return g.d2G.imag() / kCstep;
}

double SaddleGeometry::dGdv_da_real(double v) const {
  const Gderivs g = G_principal(Complex(v, 0.0), Complex(params.a, kCstep), params.gamma,
                                params.alpha0_sq(), Complex(0.0, y));
  return g.dG.imag() / kCstep;
}

double SaddleGeometry::d2Gdv2_da_real(double v) const {
  const Gderivs g = G_principal(Complex(v, 0.0), Complex(params.a, kCstep), params.gamma,
                                params.alpha0_sq(), Complex(0.0, y));
  return g.d2G.imag() / kCstep;
}

SaddlePoint solve_saddle(double x, Complex y, const BarrierParams& p, Complex v_guess) {
  p.validate();
  const Complex iy = Complex(0.0, 1.0) * y;

  auto eval = [&](Complex v) -> Gderivs {
    // general complex y: reuse the principal evaluator with s-offset iy;
    // a diverged iterate outside the representable Gaussian range reads as
    // an enormous residual so the damping logic backs off
    try {
      return G_principal(v, p.a, p.gamma, p.alpha0_sq(), iy);
    } catch (const OutOfRange&) {
      return {Complex(1e300, 0), Complex(1.0, 0), Complex(0, 0)};
    }
  };

  Complex v = v_guess;
  double min_abs_dG = std::numeric_limits<double>::infinity();
  Gderivs g = eval(v);
  double res = std::abs(g.G - x);
  for (int it = 1; it <= kNewtonMaxIter; ++it) {
    min_abs_dG = std::min(min_abs_dG, std::abs(g.dG));
    if (res < kRootTol) return {x, y, v, res, it - 1};
    Complex dG = g.dG;
    if (std::abs(dG) == 0.0) dG = Complex(1e-14, 0.0);
    const Complex full_step = (g.G - x) / dG;
    double lambda = 1.0;
    Complex v_next = v - full_step;
    Gderivs g_next = eval(v_next);
    double res_next = std::abs(g_next.G - x);
    int halvings = 0;
    while (res_next >= res && halvings < 8) {
      lambda *= 0.5;
      v_next = v - lambda * full_step;
      g_next = eval(v_next);
      res_next = std::abs(g_next.G - x);
      ++halvings;
    }
    v = v_next;
    g = g_next;
    res = res_next;
  }
  if (res < kRootTol) return {x, y, v, res, kNewtonMaxIter};

  std::ostringstream msg;
  msg << "saddle Newton stalled at v = (" << v.real() << "," << v.imag() << "), residual " << res
      << ", min |dx/dv| " << min_abs_dG;
  if (min_abs_dG < kNearFoldDetect) throw NearFold(msg.str());
  throw NoConvergence(msg.str());
}

namespace {

// Branch-continuous sqrt(gamma + alpha^2(i v t)) sampled along t in [0,1],
// anchored at the principal value at t = 0.
struct SegmentIntegrand {
  const BarrierParams* p;
  Complex v;
  std::vector<Complex> anchors;
  static constexpr int kAnchors = 64;

  explicit SegmentIntegrand(const BarrierParams& params, Complex v_) : p(&params), v(v_) {
    anchors.resize(kAnchors + 1);
    Complex prev = std::sqrt(Complex(p->gamma + p->alpha0_sq(), 0.0));
    for (int i = 0; i <= kAnchors; ++i) {
      const double t = double(i) / kAnchors;
      Complex w = std::sqrt(p->gamma + A_general(v * t, p->a, p->alpha0_sq()));
      if (std::abs(w - prev) > std::abs(w + prev)) w = -w;
      anchors[i] = w;
      prev = w;
    }
  }

  Complex operator()(double t) const {
    Complex w = std::sqrt(p->gamma + A_general(v * t, p->a, p->alpha0_sq()));
    const int i = std::min(kAnchors, int(t * kAnchors + 0.5));
    if (std::abs(w - anchors[i]) > std::abs(w + anchors[i])) w = -w;
    return w;
  }

  Complex end_value() const { return anchors.back(); }
};

}  // namespace

ComplexAction action(double x, Complex y, const BarrierParams& p, Complex v,
                     const SqrtBranch* branch) {
  (void)x;  // on the saddle manifold sqrt(A+1-x) == p - s/(2q); x is implied by v
  const Complex A = A_general(v, p.a, p.alpha0_sq());
  SqrtBranch br;
  if (branch) br = *branch;
  br.update(A, p.gamma);
  const Complex s = v + Complex(0.0, 1.0) * y;
  const Complex w = br.p - s / (2.0 * br.q);  // sqrt(alpha^2(iv)+1-x) on the saddle manifold

  SegmentIntegrand seg(p, v);
  const Complex I = integrate(seg, 0.0, 1.0, {1e-13, 1e-15, 48});

  ComplexAction out;
  out.v = v;
  out.sigma = Complex(0.0, 2.0 / 3.0) * (br.p * br.p * br.p - w * w * w) +
              (y - Complex(0.0, 1.0) * v) * br.q + Complex(0.0, 1.0) * v * I;
  out.dsigma_dx = Complex(0.0, 1.0) * w;
  out.dsigma_dy = br.q;
  out.sheet_p = br.sheet_p();
  out.sheet_q = br.sheet_q();
  return out;
}

double action_contour_deviation(const BarrierParams& p, Complex v, Complex mid_offset) {
  SegmentIntegrand seg(p, v);
  const Complex direct = Complex(0.0, 1.0) * v * integrate(seg, 0.0, 1.0, {1e-13, 1e-15, 48});

  // two-leg detour 0 -> m -> iv in the y1 plane, m = iv/2 + offset
  const Complex iv = Complex(0.0, 1.0) * v;
  const Complex m = 0.5 * iv + mid_offset;
  auto leg = [&](Complex z0, Complex z1) {
    Complex prev = std::sqrt(Complex(p.gamma, 0.0) + alpha(z0, p) * alpha(z0, p));
    // continuity anchors along the leg
    std::vector<Complex> anc(65);
    for (int i = 0; i <= 64; ++i) {
      const Complex z = z0 + (z1 - z0) * (double(i) / 64.0);
      const Complex al = p.alpha0_sq() == 0.0
                             ? Complex(0, 0)
                             : p.alpha0_sq() * std::exp(-2.0 * z * z / (p.a * p.a));
      Complex wv = std::sqrt(p.gamma + al);
      if (std::abs(wv - prev) > std::abs(wv + prev)) wv = -wv;
      anc[i] = wv;
      prev = wv;
    }
    auto f = [&](double t) {
      const Complex z = z0 + (z1 - z0) * t;
      const Complex al = p.alpha0_sq() == 0.0
                             ? Complex(0, 0)
                             : p.alpha0_sq() * std::exp(-2.0 * z * z / (p.a * p.a));
      Complex wv = std::sqrt(p.gamma + al);
      const int i = std::min(64, int(t * 64 + 0.5));
      if (std::abs(wv - anc[i]) > std::abs(wv + anc[i])) wv = -wv;
      return wv;
    };
    return (z1 - z0) * integrate(f, 0.0, 1.0, {1e-13, 1e-15, 48});
  };
  const Complex detour = leg(Complex(0, 0), m) + leg(m, iv);
  return std::abs(direct - detour);
}

}  // namespace wirebarrier
