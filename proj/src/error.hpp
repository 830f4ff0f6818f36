#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

// Numeric values are part of the C ABI (see torsionlab.h); append only.
enum class ErrorCode : int {
  Ok = 0,
  DivisionByZero = 1,
  PoleAtEvaluationPoint = 2,
  NonSquareMatrix = 3,
  SingularAssembly = 4,
  ZeroInput = 5,
  DegreeMismatch = 6,
  EvenTopDegree = 7,
  DegeneratePairing = 8,
  NonCommutingMonodromy = 9,
  ZeroTorsion = 10,
  ParityError = 11,
  StiefelWhitneyConditionViolated = 12,
  ZeroDenominatorTorsion = 13,
  NonUnitaryMonodromy = 14,
  ZeroElement = 15,
  MalformedCode = 16,
  InconsistentArcs = 17,
  ZeroMinor = 18,
  NonPolynomialInZ = 19,
  RecursionBudgetExceeded = 20,
  NonAcyclicBundle = 21,
  ComplexInvalid = 22,
  ParseError = 23,
  NotAKnot = 24,
  InvalidArgument = 25,
  Internal = 26,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace torsionlab
