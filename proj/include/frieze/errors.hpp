#ifndef FRIEZE_ERRORS_HPP
#define FRIEZE_ERRORS_HPP

#include <stdexcept>
#include <string>

// Exception types shared across the library.  Each names the contract it
// guards; the what() string carries the offending value or position.

namespace frieze {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

struct NonSquare : std::invalid_argument {
    explicit NonSquare(const std::string& msg) : std::invalid_argument("non-square matrix: " + msg) {}
};

struct ZeroInverse : std::domain_error {
    explicit ZeroInverse(const std::string& msg) : std::domain_error("inverse of zero: " + msg) {}
};

struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& msg) : std::invalid_argument("shape mismatch: " + msg) {}
};

struct RowOutOfRange : std::out_of_range {
    explicit RowOutOfRange(const std::string& msg) : std::out_of_range("row out of range: " + msg) {}
};

struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& msg) : std::invalid_argument("arity mismatch: " + msg) {}
};

struct WildInput : std::runtime_error {
    explicit WildInput(const std::string& msg) : std::runtime_error("wild input: " + msg) {}
};

struct NonInvertibleWindow : std::runtime_error {
    explicit NonInvertibleWindow(const std::string& msg) : std::runtime_error("non-invertible window: " + msg) {}
};

struct NonClosing : std::runtime_error {
    explicit NonClosing(const std::string& msg) : std::runtime_error("non-closing sequence: " + msg) {}
};

struct NotAWalk : std::invalid_argument {
    explicit NotAWalk(const std::string& msg) : std::invalid_argument("not a walk: " + msg) {}
};

struct NonIntegralValue : std::domain_error {
    explicit NonIntegralValue(const std::string& msg) : std::domain_error("non-integral value: " + msg) {}
};

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& msg) : std::runtime_error("budget exhausted: " + msg) {}
};

}  // namespace frieze

#endif  // FRIEZE_ERRORS_HPP
