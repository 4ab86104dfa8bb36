#pragma once

#include <stdexcept>
#include <string>

namespace mg {

// Bad user input: malformed words, invalid graphs, unknown family specs.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration size exceeds the configured budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure: a residue that fails to cancel, a
// non-integer genus, a cross-check mismatch. Always a bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace mg
