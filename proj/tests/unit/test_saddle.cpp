#include <doctest.h>

#include <cmath>
#include <random>

#include "wirebarrier/critical.hpp"
#include "wirebarrier/errors.hpp"
#include "wirebarrier/saddle.hpp"

using namespace wirebarrier;

namespace {
BarrierParams reference_params(double a = 2.0) { return {30.0, 0.2, std::sqrt(0.03), a}; }
}  // namespace

TEST_CASE("x = 0 seed law: iv(0,y) = y") {
  const BarrierParams p = reference_params();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double y = dist(rng);
    const SaddlePoint sp = solve_saddle(0.0, Complex(y, 0), p, Complex(0.1, -y * 0.9));
    CHECK(std::abs(sp.v + Complex(0, 1) * Complex(y, 0)) < 1e-9);
  }
}

TEST_CASE("homogeneous wire: the saddle equation closes in quadratic form") {
  BarrierParams p = reference_params();
  p.alpha0 = 0.0;
  // x = v/sqrt(gamma) - v^2/(4 gamma); x = 1 has the double root v = 2 sqrt(gamma)
  const SaddlePoint sp = solve_saddle(1.0, Complex(0, 0), p, Complex(0.8, 0));
  CHECK(sp.v.real() == doctest::Approx(2.0 * std::sqrt(0.2)).epsilon(1e-5));
  CHECK(std::abs(sp.v.imag()) < 1e-7);
  CHECK(sp.residual < kRootTol);
}

TEST_CASE("just past the fold the saddle solve reports NearFold") {
  const BarrierParams p = reference_params();
  const CriticalSet cs = find_folds(p, 0.0);
  const double x = cs.x_c1.real() + 0.005;
  CHECK_THROWS_AS(solve_saddle(x, Complex(0, 0), p, cs.v_c1), NearFold);
}

TEST_CASE("saddle derivatives match finite differences") {
  const BarrierParams p = reference_params();
  SaddleGeometry g{p, 0.4};
  const double h = 1e-6;
  for (double vr : {0.3, 0.9, 1.4}) {
    const Complex v(vr, 0.1);
    const Complex fd1 = (g.G(v + h) - g.G(v - h)) / (2.0 * h);
    CHECK(std::abs(fd1 - g.dG(v)) < 1e-8);
    const double h2 = 1e-4;
    const Complex fd2 = (g.G(v + h2) - 2.0 * g.G(v) + g.G(v - h2)) / (h2 * h2);
    CHECK(std::abs(fd2 - g.d2G(v)) < 1e-6);
    BarrierParams pa = p;
    pa.a += h;
    BarrierParams pb = p;
    pb.a -= h;
    const Complex fda =
        (SaddleGeometry{pa, 0.4}.G(v) - SaddleGeometry{pb, 0.4}.G(v)) / (2.0 * h);
    CHECK(std::abs(fda - g.dG_da(v)) < 1e-7);
  }
  // third derivative via complex step vs finite differences of d2G
  SaddleGeometry g0{p, 0.0};
  const double v0 = 1.2;
  const double fd3 = (g0.d2G(Complex(v0 + h, 0)).real() - g0.d2G(Complex(v0 - h, 0)).real()) /
                     (2.0 * h);
  CHECK(g0.d3G_real(v0) == doctest::Approx(fd3).epsilon(1e-6));
}

TEST_CASE("Hamilton-Jacobi identity is exact on the saddle manifold") {
  const BarrierParams p = reference_params();
  SaddleGeometry geom{p, 0.0};
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> dist(0.05, 2.4);
  for (int i = 0; i < 200; ++i) {
    const double v = dist(rng);
    const double x = geom.G(Complex(v, 0)).real();
    const ComplexAction act = action(x, Complex(0, 0), p, Complex(v, 0));
    const Complex lhs =
        act.dsigma_dx * act.dsigma_dx + act.dsigma_dy * act.dsigma_dy - x - (p.gamma - 1.0);
    CHECK(std::abs(lhs) < 1e-10);
  }
}

TEST_CASE("action gradient matches finite differences of sigma") {
  const BarrierParams p = reference_params();
  SaddleGeometry geom{p, 0.0};
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(0.1, 0.95);
  const double h = 1e-5;
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const double v = dist(rng);  // branch 1 stays clear of the folds
    const double x = geom.G(Complex(v, 0)).real();
    const ComplexAction a0 = action(x, Complex(0, 0), p, Complex(v, 0));

    const SaddlePoint vp = solve_saddle(x + h, Complex(0, 0), p, Complex(v, 0));
    const SaddlePoint vm = solve_saddle(x - h, Complex(0, 0), p, Complex(v, 0));
    const Complex fd_x =
        (action(x + h, Complex(0, 0), p, vp.v).sigma - action(x - h, Complex(0, 0), p, vm.v).sigma) /
        (2.0 * h);
    CHECK(std::abs(fd_x - a0.dsigma_dx) < 1e-6 * std::max(1.0, std::abs(a0.dsigma_dx)));

    const SaddlePoint yp = solve_saddle(x, Complex(h, 0), p, Complex(v, 0));
    const SaddlePoint ym = solve_saddle(x, Complex(-h, 0), p, Complex(v, 0));
    const Complex fd_y =
        (action(x, Complex(h, 0), p, yp.v).sigma - action(x, Complex(-h, 0), p, ym.v).sigma) /
        (2.0 * h);
    CHECK(std::abs(fd_y - a0.dsigma_dy) < 1e-6 * std::max(1.0, std::abs(a0.dsigma_dy)));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("homogeneous wire reduces to the 1d WKB action") {
  BarrierParams p = reference_params();
  p.alpha0 = 0.0;
  SaddleGeometry geom{p, 0.0};
  for (double v = 0.05; v < 2.0 * std::sqrt(p.gamma); v += 0.1) {
    const double x = geom.G(Complex(v, 0)).real();
    const ComplexAction act = action(x, Complex(0, 0), p, Complex(v, 0));
    const double wkb = (2.0 / 3.0) * (1.0 - std::pow(1.0 - x, 1.5));
    CHECK(std::abs(act.sigma - Complex(0, wkb)) < 1e-9);
  }
  // at the exit point sigma = 2i/3
  const ComplexAction exit_act =
      action(1.0, Complex(0, 0), p, Complex(2.0 * std::sqrt(p.gamma), 0));
  CHECK(std::abs(exit_act.sigma - Complex(0, 2.0 / 3.0)) < 1e-12);
}

TEST_CASE("wire boundary values of the action") {
  const BarrierParams p = reference_params();
  for (double y : {0.0, 0.7, -1.3}) {
    const SaddlePoint sp = solve_saddle(0.0, Complex(y, 0), p, Complex(0, -y));
    const ComplexAction act = action(0.0, Complex(y, 0), p, sp.v);
    // no decay along the wire, flux only
    CHECK(std::abs(act.sigma.imag()) < 1e-10);
    const double aly = std::abs(alpha(Complex(y, 0), p));
    CHECK(act.dsigma_dy.real() == doctest::Approx(std::sqrt(p.gamma + aly * aly)).epsilon(1e-10));
    // boundary slope i sqrt(1+alpha^2(y))
    CHECK(std::abs(act.dsigma_dx - Complex(0, std::sqrt(1.0 + aly * aly))) < 1e-10);
  }
}

TEST_CASE("y1 contour is path independent") {
  const BarrierParams p = reference_params();
  CHECK(action_contour_deviation(p, Complex(1.3, 0.0)) < 1e-8);
  CHECK(action_contour_deviation(p, Complex(2.2, 0.2)) < 1e-8);
}

TEST_CASE("saddle coordinate is constant on the imaginary-offset trajectory") {
  // with y = i eta the classical path x = x_b - eta^2/(4(x_b-1+gamma)) keeps
  // v = v_b exactly, the caustic-plane counterpart of the real trajectory
  const BarrierParams p = reference_params();
  const CriticalSet cs = find_extrema(p);
  for (double eta : {0.2, 0.5, 0.8}) {
    const double x = cs.x_b - eta * eta / (4.0 * (cs.x_b - 1.0 + p.gamma));
    const SaddlePoint sp = solve_saddle(x, Complex(0.0, eta), p, Complex(cs.v_b * 0.97, 0.01));
    CHECK(std::abs(sp.v - Complex(cs.v_b, 0.0)) < 1e-9);
  }
}

TEST_CASE("solver reports NoConvergence outside the representable domain") {
  const BarrierParams p = reference_params(0.4);
  // far outside any root basin with a hopeless guess
  CHECK_THROWS_AS(solve_saddle(50.0, Complex(0, 0), p, Complex(0.2, 0)), SolverError);
}
