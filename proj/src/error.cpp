#include "error.hpp"

namespace torsionlab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::NonSquareMatrix: return "NonSquareMatrix";
    case ErrorCode::SingularAssembly: return "SingularAssembly";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::EvenTopDegree: return "EvenTopDegree";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::NonCommutingMonodromy: return "NonCommutingMonodromy";
    case ErrorCode::ZeroTorsion: return "ZeroTorsion";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::StiefelWhitneyConditionViolated: return "StiefelWhitneyConditionViolated";
    case ErrorCode::ZeroDenominatorTorsion: return "ZeroDenominatorTorsion";
    case ErrorCode::NonUnitaryMonodromy: return "NonUnitaryMonodromy";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::InconsistentArcs: return "InconsistentArcs";
    case ErrorCode::ZeroMinor: return "ZeroMinor";
    case ErrorCode::NonPolynomialInZ: return "NonPolynomialInZ";
    case ErrorCode::RecursionBudgetExceeded: return "RecursionBudgetExceeded";
    case ErrorCode::NonAcyclicBundle: return "NonAcyclicBundle";
    case ErrorCode::ComplexInvalid: return "ComplexInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace torsionlab
