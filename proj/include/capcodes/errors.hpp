#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace capcodes {

enum class ErrorKind {
    ContextMismatch,
    DivisionByZero,
    DegreeTooLarge,
    ArityMismatch,
    LengthMismatch,
    ShapeMismatch,
    ParamOutOfRange,
    NoNonzeroSolution,
    BudgetExceeded,
    ZeroDirection,
    ShiftRequired,
    IndexOverflow,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// callers dispatch on kind().
class CodingError : public std::runtime_error {
public:
    CodingError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw CodingError(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace capcodes
