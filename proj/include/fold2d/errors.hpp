#ifndef FOLD2D_ERRORS_HPP
#define FOLD2D_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fold2d {

// Base class for every error thrown by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression text rejected by the parser. `offset` is the 0-based position
// of the offending character in the input string.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset_)
        : Error(msg + " (offset " + std::to_string(offset_) + ")"), offset(offset_) {}
    std::size_t offset;
};

// Numeric evaluation failed: unbound symbol or a domain violation
// (ln of a nonpositive value, division by zero, 0^negative, ...).
// `subexpression` is the printed form of the node that failed.
struct EvalError : Error {
    EvalError(const std::string& msg, std::string subexpression_)
        : Error(msg + " in `" + subexpression_ + "`"), subexpression(std::move(subexpression_)) {}
    std::string subexpression;
};

// Semi-inversion failures.
struct NotAffineInY : Error {
    using Error::Error;
};
struct ZeroCoefficient : Error {
    using Error::Error;
};

// synthesize_g with f_v identically zero.
struct DivisionByZeroExpression : Error {
    using Error::Error;
};

// synthesize_g_linear with A = B = 0.
struct BothConstantsZero : Error {
    using Error::Error;
};

// delta_from_linear with c = omega = 0 but A != 0.
struct DegenerateForcing : Error {
    using Error::Error;
};

// An evaluation error during integration, annotated with time and state.
struct IntegrationError : Error {
    using Error::Error;
};

// Bad argument to a toolkit operation (empty box, nonpositive step,
// undeclared symbol in a context that restricts symbols, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

// System-definition file problems, annotated with a line number.
struct SystemFileError : Error {
    SystemFileError(const std::string& msg, std::size_t line_)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    std::size_t line;
};

} // namespace fold2d

#endif
