#include "fracineq/error.hpp"

#include <utility>

namespace fracineq {

DomainError::DomainError(std::string argument, double value, const std::string& what)
    : Error(what), argument_(std::move(argument)), value_(value) {}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

EvalError::EvalError(double x, std::string node, const std::string& message)
    : Error(message), x_(x), node_(std::move(node)) {}

AccuracyError::AccuracyError(double estimate, double residual, const std::string& message)
    : Error(message), estimate_(estimate), residual_(residual) {}

PreconditionError::PreconditionError(std::string field, const std::string& message)
    : Error(message), field_(std::move(field)) {}

} // namespace fracineq
