#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base class for every failure the library reports deliberately.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input rejected while parsing the sequence-spec format or a rational literal.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int column)
        : error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A structurally valid input that violates a constraint (L(1) = 0, bad family
/// parameters, a zero leading symbol coefficient, ...).
class validation_error : public error {
public:
    using error::error;
};

/// Quadrature or series summation failed to reach the requested accuracy.
class no_convergence : public error {
public:
    using error::error;
};

}  // namespace umbral
