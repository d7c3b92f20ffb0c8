#pragma once

#include <stdexcept>
#include <string>

namespace quadsolv {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A configured bound was exceeded (degree bounds, enumeration caps).
// The CLI maps this to exit code 2.
struct capability_error : error {
    explicit capability_error(const std::string& what) : error(what) {}
};

// A precondition was violated (wrong regime, division by zero, ...).
struct usage_error : error {
    explicit usage_error(const std::string& what) : error(what) {}
};

// Input failed to parse or validate.
struct validation_error : error {
    explicit validation_error(const std::string& what) : error(what) {}
};

// A truncated series is too shallow to support the requested operation.
struct truncation_error : error {
    explicit truncation_error(const std::string& what) : error(what) {}
};

} // namespace quadsolv
