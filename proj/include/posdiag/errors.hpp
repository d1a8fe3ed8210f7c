#pragma once

#include <stdexcept>
#include <string>

namespace posdiag {

// Caller passed something that violates an operation's precondition.
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input data (JSON, fan, gram matrix, ...) is malformed or inconsistent.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency gate failed; results must not be trusted.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace posdiag
