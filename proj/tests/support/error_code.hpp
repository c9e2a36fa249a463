#pragma once

#include <optional>

#include "lcforge/error.hpp"

// Code of the lcforge::Error thrown by f, or nullopt when nothing is thrown.
template <typename F>
std::optional<lcforge::ErrorCode> error_code_of(F&& f) {
    try {
        f();
    } catch (const lcforge::Error& e) {
        return e.code();
    }
    return std::nullopt;
}
