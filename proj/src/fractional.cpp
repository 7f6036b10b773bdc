#include "diffrep/fractional.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace diffrep {

namespace {

constexpr double kIntegerGuard = 1e-12;

// Lanczos coefficients, g = 7, 9 terms (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

bool near_integer(double x, double tol = kIntegerGuard) {
    return std::abs(x - std::round(x)) <= tol;
}

using int128 = __int128;

int128 binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i; // divisions are exact in this order
    }
    return result;
}

} // namespace

FractionalOrder::FractionalOrder(double alpha_) : alpha(alpha_), n(0), c_alpha(0.0) {
    if (!(alpha > 0.0)) {
        throw NonPositiveOrderError("order must be positive, got " + std::to_string(alpha));
    }
    if (near_integer(alpha)) {
        throw IntegerOrderError("order must not be an integer, got " + std::to_string(alpha));
    }
    n = static_cast<int>(std::ceil(alpha));
    double c = std::sin(std::numbers::pi * alpha) / std::numbers::pi;
    for (int l = 1; l <= n - 1; ++l) {
        c /= (static_cast<double>(l) - alpha);
    }
    c_alpha = c;
}

FractionalOrder make_order(double alpha) { return FractionalOrder(alpha); }

double gamma_fn(double x) {
    if (x <= 0.5 && near_integer(x) && std::round(x) <= 0.0) {
        throw PoleError("gamma has a pole at " + std::to_string(x));
    }
    if (x < 0.5) {
        // reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x))
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
    }
    return lanczos_gamma(x);
}

long long binom_alternating_sum(int n, int mu) {
    if (n < 1 || n > 60) {
        throw RangeError("n must be in [1, 60], got " + std::to_string(n));
    }
    if (mu < 0 || mu >= n) {
        throw RangeError("mu must be in [0, n-1], got " + std::to_string(mu));
    }
    int128 sum = 0;
    for (int k = mu; k <= n; ++k) {
        const int128 term = binomial_exact(n, k) * binomial_exact(k, mu);
        sum += ((k - mu) % 2 == 0) ? term : -term;
    }
    return static_cast<long long>(sum);
}

double rl_power_closed_form(const FractionalOrder& order, double beta, double a, double t) {
    if (beta < 0.0) {
        throw DomainError("power exponent must be >= 0, got " + std::to_string(beta));
    }
    if (t < a) {
        throw DomainError("t must be >= a");
    }
    if (t == a) return 0.0;
    return gamma_fn(beta + 1.0) / gamma_fn(order.alpha + beta + 1.0) *
           std::pow(t - a, order.alpha + beta);
}

} // namespace diffrep
