#pragma once

#include <stdexcept>
#include <string>

namespace wirebarrier {

// One code per error class; the CLI maps these 1:1 to process exit codes.
enum class ErrorCode : int {
  ok = 0,
  config_error = 2,
  io_error = 3,
  no_convergence = 10,
  near_fold = 11,
  step_collapse = 12,
  quadrature_failure = 13,
  no_real_root = 14,
  folds_merged = 15,
  window_violation = 16,
  tracer_stall = 17,
  integrator_tolerance = 18,
  no_root = 19,
  regime_violation = 20,
  domain_error = 21,
  out_of_range = 22,
  solver_failure = 23,
  unknown = 99,
};

const char* error_code_name(ErrorCode c);

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

#define WIREBARRIER_DEFINE_ERROR(Name, code_value)                  \
  class Name : public SolverError {                                 \
   public:                                                          \
    explicit Name(const std::string& msg)                           \
        : SolverError(ErrorCode::code_value, msg) {}                \
  }

WIREBARRIER_DEFINE_ERROR(ConfigError, config_error);
WIREBARRIER_DEFINE_ERROR(IoError, io_error);
WIREBARRIER_DEFINE_ERROR(NoConvergence, no_convergence);
WIREBARRIER_DEFINE_ERROR(NearFold, near_fold);
WIREBARRIER_DEFINE_ERROR(StepCollapse, step_collapse);
WIREBARRIER_DEFINE_ERROR(QuadratureFailure, quadrature_failure);
WIREBARRIER_DEFINE_ERROR(NoRealRoot, no_real_root);
WIREBARRIER_DEFINE_ERROR(FoldsMerged, folds_merged);
WIREBARRIER_DEFINE_ERROR(WindowViolation, window_violation);
WIREBARRIER_DEFINE_ERROR(TracerStall, tracer_stall);
WIREBARRIER_DEFINE_ERROR(IntegratorTolerance, integrator_tolerance);
WIREBARRIER_DEFINE_ERROR(NoRoot, no_root);
WIREBARRIER_DEFINE_ERROR(RegimeViolation, regime_violation);
WIREBARRIER_DEFINE_ERROR(DomainError, domain_error);
WIREBARRIER_DEFINE_ERROR(OutOfRange, out_of_range);
WIREBARRIER_DEFINE_ERROR(SolverFailure, solver_failure);

#undef WIREBARRIER_DEFINE_ERROR

}  // namespace wirebarrier
