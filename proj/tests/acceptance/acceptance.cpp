// Acceptance suite: one numbered criterion per section, each printing a
// single PASS/FAIL line with the measured values. Run with a criterion
// number as argv[1] to execute just that one; exit code is the number of
// failed checks.
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wirebarrier/branch.hpp"
#include "wirebarrier/critical.hpp"
#include "wirebarrier/impurity.hpp"
#include "wirebarrier/oned.hpp"
#include "wirebarrier/scenario.hpp"
#include "wirebarrier/trajectory.hpp"

using namespace wirebarrier;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Criterion {
  Criterion(int id_, std::string summary_) : id(id_), summary(std::move(summary_)) {}
  int id;
  std::string summary;
  bool pass = true;
  std::vector<std::string> notes;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok: " : "failed: ") + what);
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  void finish(double limit_s = 0.0) {
    const double dt = seconds();
    if (limit_s > 0.0) check(dt < limit_s, "runtime " + std::to_string(dt) + " s < " +
                                               std::to_string(limit_s) + " s");
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << ": " << summary
              << "\n";
    for (const auto& n : notes) std::cout << "    " << n << "\n";
    if (!pass) ++g_failures;
  }
};

BarrierParams reference_params(double a = 2.0) { return {30.0, 0.2, std::sqrt(0.03), a}; }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool within(double value, double target, double tol_abs) {
  return std::abs(value - target) <= tol_abs;
}
bool within_rel(double value, double target, double tol_rel) {
  return std::abs(value - target) <= tol_rel * std::abs(target);
}

void criterion1() {
  Criterion c(1, "critical constants a0, x0, v0");
  const CriticalWidth cw = find_critical_width(reference_params());
  c.check(within(cw.a0, 1.72, 0.02), "a0 = " + num(cw.a0) + " vs 1.72 +- 0.02");
  c.check(within(cw.x0, 1.07, 0.02), "x0 = " + num(cw.x0) + " vs 1.07 +- 0.02");
  c.check(within(cw.v0, 1.25, 0.02), "v0 = " + num(cw.v0) + " vs 1.25 +- 0.02");
  c.finish(5.0);
}

void criterion2() {
  Criterion c(2, "cubic unfolding coefficients and caustic angle");
  const SingularExpansion se = unfold_cubic(reference_params(1.72));
  c.check(within_rel(se.c_lin_y, 0.24, 0.05), "c_lin_y = " + num(se.c_lin_y) + " vs 0.24 +- 5%");
  c.check(within_rel(se.c_cubic, 0.96, 0.05), "c_cubic = " + num(se.c_cubic) + " vs 0.96 +- 5%");
  c.check(within_rel(se.c_lin_av, 0.90, 0.05),
          "c_lin_av = " + num(se.c_lin_av) + " vs 0.90 +- 5%");
  c.check(within_rel(se.D_coeff, 1.43, 0.05), "D_coeff = " + num(se.D_coeff) + " vs 1.43 +- 5%");
  c.check(within_rel(se.delta_coeff, 0.56, 0.05),
          "delta_coeff = " + num(se.delta_coeff) + " vs 0.56 +- 5%");
  c.check(within_rel(se.tan_theta, 0.24, 0.05),
          "tan_theta = " + num(se.tan_theta) + " vs 0.24 +- 5%");
  c.check(within(se.theta_deg, 13.5, 0.7), "theta = " + num(se.theta_deg) + " deg vs 13.5 +- 0.7");
  c.finish(10.0);
}

void criterion3() {
  Criterion c(3, "action-expansion constants at the cusp");
  const ActionExpansion ae = action_expansion_coeffs(reference_params(1.72));
  c.check(within_rel(ae.slope_const, 0.13, 0.10),
          "slope_const = " + num(ae.slope_const) + " vs 0.13 +- 10%");
  c.check(within_rel(ae.slope_lin_reduced, 0.20, 0.10),
          "slope_lin_reduced = " + num(ae.slope_lin_reduced) + " vs 0.20 +- 10%");
  c.check(within_rel(ae.quartic_reduced, 0.14, 0.10),
          "quartic_reduced = " + num(ae.quartic_reduced) + " vs 0.14 +- 10%");
  c.finish();
}

void criterion4() {
  Criterion c(4, "penetration threshold a_R, slope, exit point");
  const ThresholdResult th = find_threshold(reference_params());
  c.check(within(th.a_R, 2.27, 0.02), "a_R = " + num(th.a_R) + " vs 2.27 +- 0.02");
  c.check(within_rel(th.slope, 2.0, 0.05), "slope = " + num(th.slope) + " vs 2.0 +- 5%");
  c.check(within(th.x_b, 2.0, 0.05), "x_b(a_R) = " + num(th.x_b) + " vs 2.0 +- 0.05");
  c.notes.push_back(
      "note: the root of the honest A0+A1 sits at a_R = " + num(th.a_R) +
      "; the published 2.27/2.0/2.0 trio is reproduced only if A1 is evaluated with the "
      "decaying profile alpha^2(eta) instead of alpha^2(i eta), which contradicts the "
      "growing-convention constants of criteria 1-3 and the two-route identity of criterion 6");
  c.finish();
}

void criterion5() {
  Criterion c(5, "homogeneous-wire WKB gate");
  BarrierParams p = reference_params();
  p.alpha0 = 0.0;
  const PenetrationResult r = penetration(p);
  const double expect = 4.0 * p.B / 3.0;
  c.check(std::abs(r.A0 + r.A1 - expect) <= 1e-12 * expect,
          "A0+A1 = " + num(r.A0 + r.A1) + " vs 4B/3 to 1e-12 relative");
  c.check(std::abs(r.A0 - expect * (1.0 - 3.0 * p.gamma)) <= 1e-12 * expect,
          "A0 = " + num(r.A0) + " vs (4B/3)(1-3 gamma)");
  c.check(std::abs(r.A1 - 4.0 * p.B * p.gamma) <= 1e-12 * expect,
          "A1 = " + num(r.A1) + " vs 4 B gamma");
  c.finish();
}

void criterion6() {
  Criterion c(6, "two-route oracle on a 5x5 parameter grid");
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      BarrierParams p = reference_params();
      p.alpha0 = std::sqrt(0.02 + 0.005 * i);
      p.a = 1.8 + 0.1 * j;
      const PenetrationResult r = penetration(p);
      const double hj = penetration_exponent_hj(p);
      worst = std::max(worst, std::abs((r.A0 + r.A1) - hj) / std::abs(r.A0 + r.A1));
    }
  c.check(worst < 1e-8, "max relative route difference " + num(worst) + " < 1e-8");
  c.finish(60.0);
}

void criterion7() {
  Criterion c(7, "imaginary-time trajectory gates");
  const BarrierParams p = reference_params();
  const ImaginaryTimeTrajectory tr = integrate_trajectory(p);
  c.check(std::abs(tr.eta_of_tau.back() - tr.v_b) < 1e-8,
          "terminal eta(tau0) - v_b = " + num(tr.eta_of_tau.back() - tr.v_b));
  const double slope_expect = -2.0 * std::sqrt(tr.x_b);  // x_b = 1 + alpha^2(i v_b)
  c.check(std::abs(tr.xdot_of_tau.back() - slope_expect) < 1e-8,
          "exit slope deviation " + num(std::abs(tr.xdot_of_tau.back() - slope_expect)));
  c.check(tr.max_energy_residual < 1e-10,
          "energy residual " + num(tr.max_energy_residual) + " < 1e-10");
  c.finish();
}

void criterion8() {
  Criterion c(8, "branch topology of the figure goldens");
  const fs::path dir = fs::temp_directory_path() / "wirebarrier_acceptance_goldens";
  fs::remove_all(dir);
  const auto& goldens = golden_configs();
  auto labels_from_csv = [&](const std::string& name) {
    RunOptions opt;
    opt.out_dir = (dir / name).string();
    const auto files = run_config(parse_config_text(goldens.at(name), name), opt);
    std::ifstream f(files.at(0));
    std::string line;
    std::set<std::string> labels;
    while (std::getline(f, line)) {
      const std::string tag = "#: labels = ";
      if (line.rfind(tag, 0) == 0) {
        std::stringstream ss(line.substr(tag.size()));
        std::string item;
        while (std::getline(ss, item, '|')) labels.insert(item);
      }
    }
    return labels;
  };
  c.check(labels_from_csv("fig3a") == std::set<std::string>{"1", "2", "3"},
          "fig3a labels {1,2,3}");
  c.check(labels_from_csv("fig3b") == std::set<std::string>{"1", "2", "3"},
          "fig3b labels {1,2,3}");
  c.check(labels_from_csv("fig4a") == std::set<std::string>{"1-3", "3-1", "2-2"},
          "fig4a labels {1-3,3-1,2-2}");
  c.check(labels_from_csv("fig4b") == std::set<std::string>{"1-1", "2-2", "3-3"},
          "fig4b labels {1-1,2-2,3-3}");
  // fold/merge structure above the critical width: two shared fold points
  const BarrierParams p = reference_params(2.0);
  TraceOptions topt;
  topt.x_max = 1.6;
  const auto curves = branches_at(p, 0.0, topt);
  c.check(curves.size() == 3, "three branches at a > a0");
  const CriticalSet cs = find_folds(p, 0.0);
  c.check(std::abs(curves[0].samples.back().x - cs.x_c1.real()) < 1e-8 &&
              std::abs(curves[1].samples.front().x - cs.x_c1.real()) < 1e-8,
          "branches 1 and 2 merge at the fold c1");
  c.check(std::abs(curves[1].samples.back().x - cs.x_c2.real()) < 1e-8 &&
              std::abs(curves[2].samples.front().x - cs.x_c2.real()) < 1e-8,
          "branches 2 and 3 merge at the fold c2");
  c.finish();
}

void criterion9() {
  Criterion c(9, "impurity-assisted enhancement asymptotics");
  const double x = 1.5;
  for (double a : {0.02, 0.015, 0.01}) {
    ImpurityParams ip;
    ip.k = std::sqrt(0.45);
    ip.l = 0.8;
    ip.a_imp = a;
    ip.u = 1e-3;
    ip.u_exponent = -(4.0 * ip.k_sq() - ip.l * ip.l) / (a * a);
    const double y = 2.0 * ip.k * std::sqrt(x - 1.0);
    const Complex s1 = sigma1(x, y, ip);
    const double cf = a * a * ip.l * 1e-3 / (8.0 * ip.k_sq() * (2.0 * ip.k_sq() - ip.l));
    c.check(std::abs(-s1.imag() / cf - 1.0) < 0.10,
            "a = " + num(a) + ": quadrature/closed-form = " + num(-s1.imag() / cf) +
                " within 10%");
  }
  // transport residual at scattered interior points
  ImpurityParams ip;
  ip.k = std::sqrt(0.45);
  ip.l = 0.8;
  ip.a_imp = 0.15;
  ip.u = 1e-3;
  ip.u_exponent = -(4.0 * ip.k_sq() - ip.l * ip.l) / (0.15 * 0.15);
  const double scale = 1e-3;
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dx(0.05, 0.95), dy(-2.0, 2.0);
  double worst = 0.0;
  const double h = 1e-5;
  for (int i = 0; i < 25; ++i) {
    const double xx = dx(rng), yy = dy(rng);
    const Complex s_x = (sigma1(xx + h, yy, ip) - sigma1(xx - h, yy, ip)) / (2.0 * h);
    const Complex s_y = (sigma1(xx, yy + h, ip) - sigma1(xx, yy - h, ip)) / (2.0 * h);
    const Complex resid = 2.0 * Complex(0, 1) * s_x * std::sqrt(1.0 - xx) + 2.0 * ip.k * s_y +
                          impurity_u(Complex(xx, 0), Complex(yy, 0), ip);
    worst = std::max(worst, std::abs(resid) / scale);
  }
  c.check(worst < 1e-6, "transport residual " + num(worst) + " < 1e-6");
  c.finish();
}

void criterion10() {
  Criterion c(10, "one-dimensional exact oracles");
  const double E = 1.0, V = E / 1.5, a = 15.0;
  const Reflection1DResult r = reflect_cosh_barrier(E, V, a);
  const double rel = std::abs(std::log(r.R_exact_mag) - std::log(r.R_wkb_mag)) /
                     std::abs(std::log(r.R_wkb_mag));
  c.check(rel < 0.10, "cosh barrier: |d log R| / |log R_wkb| = " + num(rel) + " < 0.1");
  c.check(r.flux_defect < 1e-8, "flux conservation defect " + num(r.flux_defect) + " < 1e-8");
  const WireZeroFieldResult w =
      wire_overbarrier_reflection(0.12, 2.8769, 0.0, 1.0);
  c.check(w.fit_residual < 0.02,
          "zero-field wire: log|R| linear fit residual " + num(w.fit_residual) + " < 2%");
  c.check(w.exponent_fit > 0.0 && w.exponent_fit <= 3.0,
          "fitted exponent c = " + num(w.exponent_fit) + " in (0, 3]");
  c.check(w.max_flux_defect < 1e-8, "wire sweep flux defect " + num(w.max_flux_defect));
  c.finish();
}

void criterion11() {
  Criterion c(11, "property suite: HJ identity, gradients, determinism");
  const BarrierParams p = reference_params();
  SaddleGeometry geom{p, 0.0};
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dv(0.05, 2.4);
  double worst_id = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double v = dv(rng);
    const double x = geom.G(Complex(v, 0)).real();
    const ComplexAction act = action(x, Complex(0, 0), p, Complex(v, 0));
    worst_id = std::max(worst_id, std::abs(act.dsigma_dx * act.dsigma_dx +
                                           act.dsigma_dy * act.dsigma_dy - x - (p.gamma - 1.0)));
  }
  c.check(worst_id < 1e-10, "HJ identity residual " + num(worst_id) + " < 1e-10");

  std::uniform_real_distribution<double> db(0.1, 0.95);
  double worst_g = 0.0;
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const double v = db(rng);
    const double x = geom.G(Complex(v, 0)).real();
    const ComplexAction a0 = action(x, Complex(0, 0), p, Complex(v, 0));
    const SaddlePoint vp = solve_saddle(x + h, Complex(0, 0), p, Complex(v, 0));
    const SaddlePoint vm = solve_saddle(x - h, Complex(0, 0), p, Complex(v, 0));
    const Complex fd = (action(x + h, Complex(0, 0), p, vp.v).sigma -
                        action(x - h, Complex(0, 0), p, vm.v).sigma) /
                       (2.0 * h);
    worst_g = std::max(worst_g, std::abs(fd - a0.dsigma_dx));
  }
  c.check(worst_g < 1e-6, "finite-difference gradient deviation " + num(worst_g) + " < 1e-6");

  TraceOptions topt;
  topt.x_min = 0.02;
  topt.x_max = 5.0;
  const auto t1 = branches_at(p, 2.0, topt);
  const auto t2 = branches_at(p, 2.0, topt);
  bool identical = t1.size() == t2.size();
  for (size_t i = 0; identical && i < t1.size(); ++i)
    identical = t1[i].samples.size() == t2[i].samples.size() &&
                std::memcmp(t1[i].samples.data(), t2[i].samples.data(),
                            t1[i].samples.size() * sizeof(BranchSample)) == 0;
  c.check(identical, "repeated branch traces are bitwise identical");
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const std::function<void()> all[] = {criterion1, criterion2, criterion3, criterion4,
                                       criterion5, criterion6, criterion7, criterion8,
                                       criterion9, criterion10, criterion11};
  for (int i = 1; i <= 11; ++i)
    if (only == 0 || only == i) all[i - 1]();
  if (only == 0)
    std::cout << "note: the exact two-dimensional wave function is out of reach by direct "
                 "numerics; correctness rests on the cross-method oracle (criterion 6) and "
                 "the one-dimensional exact oracles (criterion 10)\n";
  if (g_failures) std::cout << g_failures << " criterion check(s) failed\n";
  return g_failures;
}
