#pragma once

#include <string>
#include <vector>

#include "wirebarrier/critical.hpp"
#include "wirebarrier/saddle.hpp"

namespace wirebarrier {

struct BranchSample {
  double x = 0.0;
  Complex v{0, 0};
  Complex sigma{0, 0};
  double log_psi_mag = 0.0;  ///< -B Im sigma
};

struct BranchCurve {
  double y = 0.0;
  std::string label;  ///< one of 1,2,3,1-3,3-1,2-2,1-1,3-3
  std::vector<BranchSample> samples;
  int sheet_q = +1;  ///< recorded sqrt(gamma+A) sheet at the last sample
};

struct TraceOptions {
  double x_min = 0.0;
  double x_max = 1.6;
  double ds0 = 0.02;          ///< initial arclength step
  double ds_floor = 1e-9;
  int max_samples = 4000;
  bool extend_past_folds = false;
  double extension_length = 0.4;  ///< in x past each fold
  double seed_tolerance = 1e-9;
};

/// Pseudo-arclength continuation of the curve Im x(v) = 0 through the seed,
/// sampling (x, v, sigma, log|psi|). Deterministic for identical inputs.
BranchCurve trace_branch(double y, const BarrierParams& p, const SaddlePoint& seed,
                         const TraceOptions& opt);

/// All branches of the wave function at fixed y with figure-style labels
/// (1/2/3 for a > a0; hybrids 1-3, 3-1, 2-2 inside the reconnection window
/// at a < a0; 1-1, 2-2, 3-3 at the touching offset |y| ~ Delta).
std::vector<BranchCurve> branches_at(const BarrierParams& p, double y, const TraceOptions& opt);

/// -B Im sigma interpolated along the branch at x; OutOfRange outside the
/// sampled range.
double log_psi(double x, const BarrierParams& p, const BranchCurve& branch);

}  // namespace wirebarrier
