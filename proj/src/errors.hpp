#pragma once

#include <stdexcept>
#include <string>

namespace weylfold {

// Error taxonomy mirrors the process exit codes: 2 invalid input,
// 3 resource budget, 4 internal consistency (a mathematical identity the
// library guarantees failed to hold -- always a bug signal, never data).

struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace weylfold
