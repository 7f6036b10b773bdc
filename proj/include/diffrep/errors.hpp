#pragma once

#include <stdexcept>
#include <string>

namespace diffrep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input: rejected arguments, malformed configs. CLI maps these to exit 2.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure at runtime. CLI maps these to exit 1.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

class IntegerOrderError : public ValidationError {
public:
    explicit IntegerOrderError(const std::string& msg)
        : ValidationError("IntegerOrder: " + msg) {}
};

class NonPositiveOrderError : public ValidationError {
public:
    explicit NonPositiveOrderError(const std::string& msg)
        : ValidationError("NonPositiveOrder: " + msg) {}
};

class OrderOutOfRangeError : public ValidationError {
public:
    explicit OrderOutOfRangeError(const std::string& msg)
        : ValidationError("OrderOutOfRange: " + msg) {}
};

class PoleError : public ValidationError {
public:
    explicit PoleError(const std::string& msg) : ValidationError("Pole: " + msg) {}
};

class RangeError : public ValidationError {
public:
    explicit RangeError(const std::string& msg) : ValidationError("Range: " + msg) {}
};

class DomainError : public ValidationError {
public:
    explicit DomainError(const std::string& msg) : ValidationError("Domain: " + msg) {}
};

class ConfigError : public ValidationError {
public:
    explicit ConfigError(const std::string& msg) : ValidationError("Config: " + msg) {}
};

class UnsupportedTransformError : public ValidationError {
public:
    explicit UnsupportedTransformError(const std::string& msg)
        : ValidationError("UnsupportedTransform: " + msg) {}
};

class ToleranceNotMetError : public NumericalError {
public:
    explicit ToleranceNotMetError(const std::string& msg)
        : NumericalError("ToleranceNotMet: " + msg) {}
};

class ConvergenceError : public NumericalError {
public:
    explicit ConvergenceError(const std::string& msg)
        : NumericalError("Convergence: " + msg) {}
};

} // namespace diffrep
