#pragma once
#include <stdexcept>
#include <string>

namespace hclif {

// Bad user-facing input: unparsable coordinates, non-prime p, wrong arity.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (degree, basis size, ambient dimension) was hit.
struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically undefined operation (division by zero, singular solve).
struct math_error : std::runtime_error {
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed; indicates a bug or a falsified expectation.
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hclif
