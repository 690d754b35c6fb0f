#pragma once

#include <stdexcept>
#include <string>

namespace lca {

/// Caller misuse: bad arguments, malformed input, ambient mismatch.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation not available in this configuration (e.g. structural analysis
/// on an algebra that still carries formal parameters).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lca
