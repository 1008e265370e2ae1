#include "finfree/error.hpp"

namespace finfree {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroDilation: return "ZeroDilation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FloatBackend: return "FloatBackend";
    case ErrorCode::InadmissibleDenominator: return "InadmissibleDenominator";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::DegreeDeficient: return "DegreeDeficient";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DegreeGapTooLarge: return "DegreeGapTooLarge";
    case ErrorCode::NonRealRoots: return "NonRealRoots";
    case ErrorCode::VanishingFirstMoment: return "VanishingFirstMoment";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::BranchDegenerate: return "BranchDegenerate";
    case ErrorCode::BranchJump: return "BranchJump";
    case ErrorCode::NegativeDensity: return "NegativeDensity";
    case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NonIntegerBetaPath: return "NonIntegerBetaPath";
    case ErrorCode::DuplicateC: return "DuplicateC";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace finfree
