#include "lcforge/error.hpp"

namespace lcforge {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidPeriod: return "InvalidPeriod";
        case ErrorCode::InvalidDigit: return "InvalidDigit";
        case ErrorCode::PeriodMismatch: return "PeriodMismatch";
        case ErrorCode::CannotHalve: return "CannotHalve";
        case ErrorCode::InvalidSupport: return "InvalidSupport";
        case ErrorCode::LemmaPreconditionViolated: return "LemmaPreconditionViolated";
        case ErrorCode::SearchTooLarge: return "SearchTooLarge";
        case ErrorCode::UndefinedForZeroSequence: return "UndefinedForZeroSequence";
        case ErrorCode::NotFoundWithinCap: return "NotFoundWithinCap";
        case ErrorCode::InvalidL: return "InvalidL";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NoFormulaAvailable: return "NoFormulaAvailable";
        case ErrorCode::InvalidQuery: return "InvalidQuery";
    }
    return "Unknown";
}

SearchTooLarge::SearchTooLarge(std::uint64_t estimated)
    : Error(ErrorCode::SearchTooLarge,
            "error-pattern search needs " + std::to_string(estimated) + " evaluations"),
      estimated_(estimated) {}

}  // namespace lcforge
