#include "wirebarrier/potential.hpp"

#include <cmath>

#include "wirebarrier/errors.hpp"

namespace wirebarrier {

namespace {

Complex guarded_exp(Complex e, const char* what) {
  if (std::abs(e.real()) > kGaussianExpCap)
    throw OutOfRange(std::string(what) + ": Gaussian exponent " + std::to_string(e.real()) +
                     " exceeds cap " + std::to_string(kGaussianExpCap));
  return std::exp(e);
}

}  // namespace

Complex alpha(Complex y, const BarrierParams& p) {
  if (p.alpha0 == 0.0) return {0.0, 0.0};
  switch (p.profile) {
    case ProfileFamily::gaussian:
      return p.alpha0 * guarded_exp(-y * y / (p.a * p.a), "alpha");
  }
  throw DomainError("unsupported wire profile family");
}

Complex alpha_sq_iv(Complex v, const BarrierParams& p) {
  if (p.alpha0 == 0.0) return {0.0, 0.0};
  return p.alpha0_sq() * guarded_exp(2.0 * v * v / (p.a * p.a), "alpha_sq_iv");
}

Complex impurity_u(Complex x, Complex y, const ImpurityParams& p) {
  if (p.u == 0.0) return {0.0, 0.0};
  const double a2 = p.a_imp * p.a_imp;
  const double logu = std::log(p.u) + p.u_exponent;
  const Complex g1 = -((x - p.l) * (x - p.l) + y * y) / a2 + logu;
  const Complex g2 = -((x + p.l) * (x + p.l) + y * y) / a2 + logu;
  return -(guarded_exp(g1, "impurity_u") + guarded_exp(g2, "impurity_u"));
}

}  // namespace wirebarrier
