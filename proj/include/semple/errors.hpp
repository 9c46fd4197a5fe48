#ifndef SEMPLE_ERRORS_HPP
#define SEMPLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semple {

enum class ErrorCode {
    // polynomial / linear elimination
    NotLinear,
    NonConstantCoefficient,
    // truncated series
    DivisionOrderLoss,
    ZeroDivisor,
    NotDivisible,
    // chart transitions
    LastCoordinateZero,
    // nodal family
    MismatchWithRecursion,
    InconsistentChain,
    EliminationFailed,
    // stratification words
    IncompatibleTwigWords,
    // curve lifting
    OrderExhausted,
    BothDerivativesZero,
    TruncationTooShort,
    // misuse of an API contract
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::NonConstantCoefficient: return "NonConstantCoefficient";
    case ErrorCode::DivisionOrderLoss: return "DivisionOrderLoss";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::LastCoordinateZero: return "LastCoordinateZero";
    case ErrorCode::MismatchWithRecursion: return "MismatchWithRecursion";
    case ErrorCode::InconsistentChain: return "InconsistentChain";
    case ErrorCode::EliminationFailed: return "EliminationFailed";
    case ErrorCode::IncompatibleTwigWords: return "IncompatibleTwigWords";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::BothDerivativesZero: return "BothDerivativesZero";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace semple

#endif
