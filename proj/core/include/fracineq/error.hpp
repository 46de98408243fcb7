#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracineq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a special function or operator.
class DomainError : public Error {
public:
    DomainError(std::string argument, double value, const std::string& what);

    const std::string& argument() const noexcept { return argument_; }
    double value() const noexcept { return value_; }

private:
    std::string argument_;
    double value_;
};

/// Malformed expression text. Carries the byte offset of the offending token
/// and the set of tokens the parser would have accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Evaluation left the natural domain of the expression (ln of a non-positive
/// value, division by zero, non-finite power).
class EvalError : public Error {
public:
    EvalError(double x, std::string node, const std::string& message);

    double x() const noexcept { return x_; }
    const std::string& node() const noexcept { return node_; }

private:
    double x_;
    std::string node_;
};

/// Operation not supported on the given expression (differentiating abs).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before reaching its tolerance.
class AccuracyError : public Error {
public:
    AccuracyError(double estimate, double residual, const std::string& message);

    double estimate() const noexcept { return estimate_; }
    double residual() const noexcept { return residual_; }

private:
    double estimate_;
    double residual_;
};

/// A checker or operation was invoked outside its stated preconditions.
class PreconditionError : public Error {
public:
    PreconditionError(std::string field, const std::string& message);

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace fracineq
