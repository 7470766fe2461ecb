#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace otcfm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension or length mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

// Invalid configuration value or unknown key.
struct ConfigError : Error {
    using Error::Error;
};

// Value outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Token id outside the configured vocabulary.
struct VocabError : Error {
    using Error::Error;
};

struct EmptyInputError : Error {
    using Error::Error;
};

// A required optional input (e.g. durations) is missing.
struct ContractError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Non-finite value produced during an iterative computation; carries the
// step index at which it appeared.
struct DivergenceError : Error {
    DivergenceError(const std::string& what, std::ptrdiff_t step)
        : Error(what + " at step " + std::to_string(step)), step(step) {}
    std::ptrdiff_t step;
};

}  // namespace otcfm
