#include "diffrep/source.hpp"

#include <cmath>

namespace diffrep {

SourceFunction make_source(const std::string& tag, double a) {
    if (tag == "const") {
        return {[](double) { return 1.0; }, tag, std::nullopt};
    }
    if (tag == "zero") {
        return {[](double) { return 0.0; }, tag, std::nullopt};
    }
    if (tag == "sin") {
        return {[](double t) { return std::sin(t); }, tag, std::nullopt};
    }
    if (tag == "cos") {
        return {[](double t) { return std::cos(t); }, tag, std::nullopt};
    }
    if (tag == "exp") {
        return {[](double t) { return std::exp(t); }, tag, std::nullopt};
    }
    if (tag.rfind("poly:", 0) == 0) {
        double beta = 0.0;
        try {
            std::size_t used = 0;
            beta = std::stod(tag.substr(5), &used);
            if (used != tag.size() - 5) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError("malformed power source '" + tag + "'");
        }
        if (beta < 0.0) {
            throw ConfigError("power source needs beta >= 0, got " + tag);
        }
        return {[a, beta](double t) { return std::pow(t - a, beta); }, tag, std::nullopt};
    }
    throw ConfigError("unknown source '" + tag + "'");
}

} // namespace diffrep
