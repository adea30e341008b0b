#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace gnewton {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

using NodeId = int;

enum class ErrorCode {
  // graph construction / evaluation
  CycleDetected,
  MissingTransition,
  DanglingParent,
  DimensionMismatch,
  NonFiniteState,
  NonFiniteAdjoint,
  DimensionCapExceeded,
  // structured QP / KKT solve
  InvalidQP,
  SingularPivot,
  RankDeficientConstraints,
  ResidualTooLarge,
  SingularSystem,
  // Newton assembly / SQP driver
  InfeasibleTrace,
  MissingSecondDerivative,
  LineSearchFailed,
  MaxIterationsExceeded,
  // I/O
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception; carries a machine-checkable code plus context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gnewton
