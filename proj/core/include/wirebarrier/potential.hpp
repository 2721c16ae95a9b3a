#pragma once

#include <complex>

#include "wirebarrier/params.hpp"

namespace wirebarrier {

using Complex = std::complex<double>;

/// Exponent cap for Gaussian evaluation; beyond this the semiclassical
/// regime is meaningless and an error beats an Inf.
inline constexpr double kGaussianExpCap = 700.0;

/// Wire profile alpha(y) = alpha0 * exp(-y^2/a^2), entire in y.
/// For purely imaginary argument iv this grows as exp(+v^2/a^2).
/// Throws OutOfRange when |Re(-y^2/a^2)| exceeds kGaussianExpCap.
Complex alpha(Complex y, const BarrierParams& p);

/// alpha^2(i v) for the saddle coordinate; real and growing for real v.
Complex alpha_sq_iv(Complex v, const BarrierParams& p);

/// Impurity potential of depth -u: two Gaussians mirrored at x = +-l,
/// u(-x,y) = u(x,y) by construction. Same exponent cap as alpha.
Complex impurity_u(Complex x, Complex y, const ImpurityParams& p);

}  // namespace wirebarrier
