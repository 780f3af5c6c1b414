#pragma once

#include <stdexcept>
#include <string>

namespace normsurf {

enum class ErrorCode {
    DimensionMismatch,
    SingularMatrix,
    NotMinimal,          // a vertex weight below 2 (a (-1)-curve in a minimal resolution)
    Disconnected,
    Syntax,              // malformed input document
    NotNegativeDefinite, // configuration is not contractible
    InvalidArgument,
    HypothesisViolation, // a theorem hypothesis does not hold for the given data
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::SingularMatrix: return "singular-matrix";
    case ErrorCode::NotMinimal: return "not-minimal";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::NotNegativeDefinite: return "not-negative-definite";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::HypothesisViolation: return "hypothesis-violation";
    case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

} // namespace normsurf
