#pragma once

#include <stdexcept>
#include <string>

namespace organic {

// Base of every error raised by the generator. The CLI maps each subclass to
// an exit code, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input configuration (dimensions, policies, CA parameters).
class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public ValidationError {
public:
    DimensionError(std::string axis, int value, int minimum)
        : ValidationError(axis + " must be >= " + std::to_string(minimum) + " (got " +
                          std::to_string(value) + ")"),
          axis_(std::move(axis)) {}

    const std::string& axis() const noexcept { return axis_; }

private:
    std::string axis_;
};

// A pipeline stage could not produce a result for a valid configuration.
class GenerationError : public Error {
public:
    GenerationError(std::string stage, const std::string& what)
        : Error(stage + ": " + what), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

// Malformed ASCII layout or JSON document. row/column are 0-based; -1 when
// the location is unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int row = -1, int column = -1)
        : Error(format(what, row, column)), row_(row), column_(column) {}

    int row() const noexcept { return row_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int row, int column) {
        std::string out = what;
        if (row >= 0) {
            out += " (row " + std::to_string(row);
            if (column >= 0) out += ", column " + std::to_string(column);
            out += ")";
        }
        return out;
    }

    int row_;
    int column_;
};

}  // namespace organic
