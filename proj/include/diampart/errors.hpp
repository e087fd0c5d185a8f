#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diampart {

/// A precondition of a library call was not met (bad vertex id, c out of range, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Operation is not defined for the instance's weight source.
class UnsupportedSource : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exhaustive reference routine refused an instance larger than its budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed instance file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw ContractViolation(msg);
}

}  // namespace detail
}  // namespace diampart
