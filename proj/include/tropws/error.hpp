#pragma once
#include <stdexcept>
#include <string>

namespace tropws {

// Bad mathematical input: non-homogeneous ideal, parameter out of range,
// ring mismatch. The CLI maps these to exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error with a character position into the offending text.
struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), pos(position) {}
};

// Invariant violation inside the library. Never expected on valid input;
// callers should not catch this except to abort loudly.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace tropws
