#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ivi {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Exact evaluation hit a point outside the partial operation's domain
// (division by zero). The message names the operands.
struct UndefinedValueError : Error {
    explicit UndefinedValueError(const std::string& msg)
        : Error("undefined-value", msg) {}
};

struct UnboundVariableError : Error {
    explicit UnboundVariableError(const std::string& name)
        : Error("unbound-variable", "unbound variable '" + name + "'") {}
};

// Syntax error from the expression parser. `offset` is the byte offset of
// the offending token; `expected` lists what would have been accepted there.
struct ParseError : Error {
    ParseError(std::size_t offset_, std::vector<std::string> expected_,
               const std::string& msg)
        : Error("syntax-error", msg),
          offset(offset_),
          expected(std::move(expected_)) {}
    std::size_t offset;
    std::vector<std::string> expected;
};

// A gauge returned a non-positive value; `at` (rendered into the message)
// is the evaluation point.
struct InvalidGaugeError : Error {
    explicit InvalidGaugeError(const std::string& at_str)
        : Error("invalid-gauge",
                "gauge returned a non-positive value at " + at_str) {}
};

struct EmptyDomainError : Error {
    explicit EmptyDomainError(const std::string& msg)
        : Error("empty-domain", msg) {}
};

struct EmptyWindowError : Error {
    explicit EmptyWindowError(const std::string& msg)
        : Error("empty-window", msg) {}
};

// Malformed input at the tool boundary (bad set spec, unreadable file, ...).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error("input-error", msg) {}
};

}  // namespace ivi
