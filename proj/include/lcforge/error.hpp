#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcforge {

enum class ErrorCode {
    InvalidPeriod,
    InvalidDigit,
    PeriodMismatch,
    CannotHalve,
    InvalidSupport,
    LemmaPreconditionViolated,
    SearchTooLarge,
    UndefinedForZeroSequence,
    NotFoundWithinCap,
    InvalidL,
    InvalidParams,
    TooLarge,
    NoFormulaAvailable,
    InvalidQuery,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when an exhaustive error-pattern search would exceed its budget.
class SearchTooLarge : public Error {
public:
    explicit SearchTooLarge(std::uint64_t estimated);

    /// Number of patterns the search would have evaluated (saturated at 2^64-1).
    std::uint64_t estimated() const noexcept { return estimated_; }

private:
    std::uint64_t estimated_;
};

}  // namespace lcforge
