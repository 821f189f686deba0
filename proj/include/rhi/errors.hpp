// Error categories that the CLI maps to exit codes.
#pragma once

#include <stdexcept>

namespace rhi {

// Bad or missing configuration (exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training or trial state became non-finite (exit code 2).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures (exit code 3).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rhi
