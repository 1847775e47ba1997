#pragma once

#include <stdexcept>
#include <string>

namespace tslice {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction would exceed the configured order cap.
struct CapError : Error {
    using Error::Error;
};

// Malformed text input (group expression, cycle notation, subgroup address).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

} // namespace tslice
