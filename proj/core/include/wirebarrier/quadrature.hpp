#pragma once

#include <cmath>
#include <complex>

#include "wirebarrier/errors.hpp"

namespace wirebarrier {

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_depth = 48;
  long max_intervals = 2000000;
};

namespace detail {

// Gauss-Kronrod 15-7 nodes/weights on [-1,1] (positive half; symmetric).
inline constexpr double kKronrodNodes[8] = {
    0.000000000000000000000000000000000e+00, 2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01, 5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01, 8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01, 9.914553711208126392068546975263285e-01};
inline constexpr double kKronrodWeights[8] = {
    2.094821410847278280129991748917143e-01, 2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01, 1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01, 1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02, 2.293532201052922496373200805896959e-02};
inline constexpr double kGaussWeights[4] = {
    4.179591836734693877551020408163265e-01, 3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01, 1.294849661688696932706114326790820e-01};

template <typename F, typename R>
void gk15(const F& f, double lo, double hi, R& kronrod, double& err) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  R fc = f(c);
  R gauss = kGaussWeights[0] * fc;
  kronrod = kKronrodWeights[0] * fc;
  for (int j = 1; j < 8; ++j) {
    const double dx = h * kKronrodNodes[j];
    R fsum = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[j] * fsum;
    if (j % 2 == 0) gauss += kGaussWeights[j / 2] * fsum;
  }
  kronrod *= h;
  gauss *= h;
  err = std::abs(kronrod - gauss);
}

template <typename F, typename R>
R integrate_rec(const F& f, double lo, double hi, double tol, int depth, double* err_acc,
                long* budget) {
  R whole;
  double err;
  gk15<F, R>(f, lo, hi, whole, err);
  if (!std::isfinite(err))
    throw QuadratureFailure("non-finite integrand between " + std::to_string(lo) + " and " +
                            std::to_string(hi));
  if (err <= tol || depth <= 0) {
    if (err_acc) *err_acc += err;
    if (depth <= 0 && err > tol * 64)
      throw QuadratureFailure("max bisection depth reached, local error " + std::to_string(err));
    return whole;
  }
  if (--(*budget) <= 0) throw QuadratureFailure("interval budget exhausted");
  const double mid = 0.5 * (lo + hi);
  return integrate_rec<F, R>(f, lo, mid, 0.5 * tol, depth - 1, err_acc, budget) +
         integrate_rec<F, R>(f, mid, hi, 0.5 * tol, depth - 1, err_acc, budget);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [lo, hi]. The result type is
/// deduced from f (double or std::complex<double>). err_out, when given,
/// receives the accumulated local error estimate.
template <typename F>
auto integrate(const F& f, double lo, double hi, QuadratureOptions opt = {},
               double* err_out = nullptr) {
  using R = decltype(f(lo));
  if (lo == hi) return R{};
  R probe;
  double err0;
  detail::gk15<F, R>(f, lo, hi, probe, err0);
  double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(probe));
  if (tol == 0.0) tol = 1e-300;
  double acc = 0.0;
  long budget = opt.max_intervals;
  R result = detail::integrate_rec<F, R>(f, lo, hi, tol, opt.max_depth, &acc, &budget);
  if (err_out) *err_out = acc;
  return result;
}

}  // namespace wirebarrier
