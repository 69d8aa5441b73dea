#pragma once

#include <stdexcept>
#include <string>

namespace realbetti {

// Every failure mode the engine can signal. Validation-class codes map to CLI
// exit 2; TailNotZero (and only it) signals an internal inconsistency, exit 3.
enum class ErrorCode {
    DivisorNotUnit,
    TailNotZero,
    InvalidTopology,
    NotAdmissible,
    NotCoprime,
    SlopeOrderViolation,
    InvalidInput,
    UnsupportedRank,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisorNotUnit: return "DivisorNotUnit";
        case ErrorCode::TailNotZero: return "TailNotZero";
        case ErrorCode::InvalidTopology: return "InvalidTopology";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::SlopeOrderViolation: return "SlopeOrderViolation";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace realbetti
