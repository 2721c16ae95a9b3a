#include <doctest.h>

#include <cmath>

#include "wirebarrier/errors.hpp"
#include "wirebarrier/trajectory.hpp"

using namespace wirebarrier;

namespace {
BarrierParams reference_params(double a = 2.0) { return {30.0, 0.2, std::sqrt(0.03), a}; }
}  // namespace

TEST_CASE("trajectory reproduces the closed form and its boundary data") {
  for (double a : {2.0, 2.27}) {
    const BarrierParams p = reference_params(a);
    const ImaginaryTimeTrajectory tr = integrate_trajectory(p);
    CHECK(tr.max_closed_form_dev < 1e-10);
    CHECK(tr.max_energy_residual < 1e-10);
    CHECK(tr.tau0 == doctest::Approx(std::sqrt(tr.x_b)).epsilon(1e-14));
    // terminal point reaches the wire at eta = v_b
    CHECK(std::abs(tr.x_of_tau.back()) < 1e-8);
    CHECK(std::abs(tr.eta_of_tau.back() - tr.v_b) < 1e-8);
    // exit slope matches the wire boundary condition
    const double Ab = tr.x_b - 1.0;
    CHECK(std::abs(tr.xdot_of_tau.back() + 2.0 * std::sqrt(1.0 + Ab)) < 1e-8);
  }
}

TEST_CASE("homogeneous trajectory scales") {
  BarrierParams p = reference_params();
  p.alpha0 = 0.0;
  const ImaginaryTimeTrajectory tr = integrate_trajectory(p);
  CHECK(tr.tau0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tr.eta_of_tau.back() == doctest::Approx(2.0 * std::sqrt(0.2)).epsilon(1e-10));
}

TEST_CASE("Lagrangian quadrature equals the closed form") {
  for (double a : {2.0, 2.27, 1.8}) {
    const BarrierParams p = reference_params(a);
    const ImaginaryTimeTrajectory tr = integrate_trajectory(p);
    const double quad = action_A0(p, tr);
    const double closed = action_A0_closed_form(p, tr.v_b);
    CHECK(std::abs(quad - closed) < 1e-10 * std::abs(closed));
  }
}

TEST_CASE("closed forms in the homogeneous limit") {
  BarrierParams p = reference_params();
  p.alpha0 = 0.0;
  const ImaginaryTimeTrajectory tr = integrate_trajectory(p);
  CHECK(action_A0(p, tr) == doctest::Approx(16.0).epsilon(1e-12));           // (4B/3)(1-3g)
  CHECK(action_A1(p, tr.v_b) == doctest::Approx(24.0).epsilon(1e-12));       // 4 B g
  const PenetrationResult r = penetration(p);
  CHECK(std::abs(r.A0 + r.A1 - 4.0 * p.B / 3.0) < 1e-12 * (4.0 * p.B / 3.0));
  CHECK(r.w_log == doctest::Approx(-4.0 * p.B / 3.0).epsilon(1e-12));
  CHECK(r.w_log == doctest::Approx(r.wkb_log).epsilon(1e-12));

  BarrierParams third = p;
  third.gamma = 1.0 / 3.0;
  const CriticalSet cs = find_extrema(third);
  CHECK(std::abs(action_A0_closed_form(third, cs.v_b)) < 1e-12);
}

TEST_CASE("exponents are linear in B") {
  const BarrierParams p30 = reference_params();
  BarrierParams p60 = p30;
  p60.B = 60.0;
  const PenetrationResult r30 = penetration(p30);
  const PenetrationResult r60 = penetration(p60);
  CHECK(r60.A0 == doctest::Approx(2.0 * r30.A0).epsilon(1e-13));
  CHECK(r60.A1 == doctest::Approx(2.0 * r30.A1).epsilon(1e-12));
}

TEST_CASE("trajectory route agrees with the Hamilton-Jacobi route") {
  const BarrierParams p = reference_params();
  const PenetrationResult r = penetration(p);
  const double hj = penetration_exponent_hj(p);
  CHECK(std::abs((r.A0 + r.A1) - hj) < 1e-8 * std::abs(r.A0 + r.A1));
}

TEST_CASE("penetration exponent is monotone in the width") {
  const BarrierParams base = reference_params();
  const CriticalWidth cw = find_critical_width(base);
  const double aR = 2.772396;  // frozen honest threshold
  double prev = -1e300;
  for (int i = 0; i <= 24; ++i) {
    const double a = 1.05 * cw.a0 + (1.2 * aR - 1.05 * cw.a0) * double(i) / 24;
    const PenetrationResult r = penetration(reference_params(a));
    CHECK(r.w_log >= prev);
    prev = r.w_log;
  }
}

TEST_CASE("threshold of the penetration exponent (frozen honest values)") {
  const ThresholdResult th = find_threshold(reference_params());
  CHECK(th.a_R == doctest::Approx(2.772396).epsilon(1e-4));
  CHECK(th.slope == doctest::Approx(1.737687).epsilon(1e-3));
  CHECK(th.x_b == doctest::Approx(2.354645).epsilon(1e-3));
  // unit conversion: the threshold field E_R = a_R*u0/a_phys
  const double u0 = 2.0, a_phys = 3.0;
  const double E_R = th.a_R * u0 / a_phys;
  CHECK(E_R == doctest::Approx(th.a_R * u0 / a_phys).epsilon(1e-15));

  BarrierParams hom = reference_params();
  hom.alpha0 = 0.0;
  CHECK_THROWS_AS(find_threshold(hom), NoRoot);
}

TEST_CASE("penetration near the honest threshold is linear in a") {
  const double aR = 2.772396;
  for (double da : {0.05, 0.1}) {
    const PenetrationResult r = penetration(reference_params(aR - da));
    CHECK(r.w_log == doctest::Approx(-1.7377 * 30.0 * da).epsilon(0.03));
  }
}
