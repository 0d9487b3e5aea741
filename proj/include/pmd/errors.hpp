#pragma once

#include <stdexcept>
#include <string>

namespace pmd {

struct NegativeBase : std::domain_error {
    explicit NegativeBase(const std::string& msg) : std::domain_error(msg) {}
};

struct InvalidArity : std::domain_error {
    explicit InvalidArity(const std::string& msg) : std::domain_error(msg) {}
};

struct EmptyTree : std::domain_error {
    explicit EmptyTree(const std::string& msg) : std::domain_error(msg) {}
};

struct AttachmentMismatch : std::domain_error {
    explicit AttachmentMismatch(const std::string& msg) : std::domain_error(msg) {}
};

struct NonIntegerSum : std::logic_error {
    explicit NonIntegerSum(const std::string& msg) : std::logic_error(msg) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed canonical tree text; `position` is a byte offset into the input.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace pmd
