#pragma once

#include <functional>
#include <optional>
#include <string>

#include "diffrep/errors.hpp"

namespace diffrep {

/// A source function f evaluable at any point of its interval, plus
/// metadata. Callables must be reentrant: evaluation happens concurrently
/// and out of order.
struct SourceFunction {
    std::function<double(double)> fn;
    std::string tag = "custom";
    std::optional<int> smoothness; // f in C^l when known

    double operator()(double t) const { return fn(t); }
};

/// Builds a named source: "const", "zero", "poly:<beta>" (f(t) = (t-a)^beta),
/// "sin", "cos", "exp". Unknown names throw ConfigError.
SourceFunction make_source(const std::string& tag, double a);

} // namespace diffrep
