// Error codes and the exception type shared by all liecoh modules.

#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

enum class ErrorCode {
    InvalidRank,
    DimensionMismatch,
    NotDominant,
    GroupTooLarge,
    NotWInvariant,
    NotInJW,
    PreconditionFailed,
    TooLarge,
    SizeMismatch,
    IndexOutOfRange,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotWInvariant: return "NotWInvariant";
    case ErrorCode::NotInJW: return "NotInJW";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace liecoh
