#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace axo {

/// Base class of all exceptions thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix/vector shapes do not fit the requested operation.
struct DimensionError : Error {
    using Error::Error;
};

/// Input values are malformed (NaN, infinity, asymmetric where symmetry is required, zero vector).
struct InvalidInputError : Error {
    using Error::Error;
};

/// An iterative method exhausted its iteration budget.
struct ConvergenceError : Error {
    using Error::Error;
};

/// A matrix is singular (or numerically singular) where an inverse is needed.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// The mapping has no affine part in its top row (a0 = 0), so the
/// reduction and everything downstream of it is undefined.
struct NotCentralError : Error {
    using Error::Error;
};

/// A bounded redraw loop ran out of attempts.
struct RetryExhaustedError : Error {
    using Error::Error;
};

/// Text or JSON input could not be parsed. Carries a 1-based line and column
/// where that is meaningful (0 when it is not).
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : Error(format(message, line, column)), line(line), column(column) {}

    std::size_t line;
    std::size_t column;

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        std::string out = "line " + std::to_string(line);
        if (column != 0) out += ", column " + std::to_string(column);
        out += ": " + message;
        return out;
    }
};

}  // namespace axo
