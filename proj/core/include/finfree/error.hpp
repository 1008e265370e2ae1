#pragma once

#include <stdexcept>
#include <string>

namespace finfree {

enum class ErrorCode {
    ZeroDilation,
    DegreeMismatch,
    FloatBackend,
    InadmissibleDenominator,
    ZeroDegree,
    DegreeDeficient,
    ZeroMultiplier,
    TooLarge,
    NotComparable,
    NonConvergence,
    DegreeGapTooLarge,
    NonRealRoots,
    VanishingFirstMoment,
    ZeroScale,
    BranchDegenerate,
    BranchJump,
    NegativeDensity,
    ThetaOutOfRange,
    UnknownFamily,
    InvalidParameters,
    NonIntegerBetaPath,
    DuplicateC,
    QuadratureFailure,
    ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace finfree
