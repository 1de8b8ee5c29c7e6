#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fzdet {

enum class ErrorCode {
    incompatible_value,
    dimension_mismatch,
    kind_mismatch,
    carrier_violation,
    unknown_symbol,
    not_quasi_order,
    precondition_failed,
    budget_exceeded,
    syntax_error,
    semantic_error,
    duplicate_section,
    invalid_automaton,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown when a fixpoint or enumeration does not finish within its Budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string what_limit, std::size_t limit)
        : Error(ErrorCode::budget_exceeded,
                "budget exceeded: " + what_limit + " > " + std::to_string(limit)),
          limit_name_(std::move(what_limit)),
          limit_(limit) {}

    const std::string& limit_name() const noexcept { return limit_name_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::string limit_name_;
    std::size_t limit_;
};

// Parse failures; line is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, const std::string& message)
        : Error(code, line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace fzdet
