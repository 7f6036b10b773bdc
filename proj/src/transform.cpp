#include "diffrep/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace diffrep {

bool Endpoint::below(double omega) const {
    switch (tag) {
        case Tag::NegInf: return true;
        case Tag::PosInf: return false;
        default: return value < omega;
    }
}

bool Endpoint::above(double omega) const {
    switch (tag) {
        case Tag::NegInf: return false;
        case Tag::PosInf: return true;
        default: return value > omega;
    }
}

Transform Transform::exp() {
    Transform t;
    t.kind_ = TransformKind::Exp;
    t.lo_ = Endpoint::neg_inf();
    t.hi_ = Endpoint::pos_inf();
    t.name_ = "exp";
    return t;
}

Transform Transform::square() {
    Transform t;
    t.kind_ = TransformKind::Square;
    t.lo_ = Endpoint::finite(0.0);
    t.hi_ = Endpoint::pos_inf();
    t.name_ = "square";
    return t;
}

Transform Transform::power_one_minus_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw RangeError("power transform needs 0 < alpha < 1, got " + std::to_string(alpha));
    }
    Transform t;
    t.kind_ = TransformKind::PowerOneMinusAlpha;
    t.lo_ = Endpoint::finite(0.0);
    t.hi_ = Endpoint::pos_inf();
    t.alpha_ = alpha;
    t.name_ = "power";
    return t;
}

Transform Transform::tan_half_pi() {
    Transform t;
    t.kind_ = TransformKind::TanHalfPi;
    t.lo_ = Endpoint::finite(0.0);
    t.hi_ = Endpoint::finite(1.0);
    t.name_ = "tan";
    return t;
}

Transform Transform::rational(double sigma, double rho) {
    if (!(sigma > 0.0) || !(rho > 0.0)) {
        throw RangeError("rational transform needs sigma, rho > 0");
    }
    Transform t;
    t.kind_ = TransformKind::Rational;
    t.lo_ = Endpoint::finite(0.0);
    t.hi_ = Endpoint::finite(1.0);
    t.sigma_ = sigma;
    t.rho_ = rho;
    t.name_ = "rational";
    return t;
}

Transform Transform::custom(std::function<double(double)> psi_fn,
                            std::function<double(double)> psi_prime_fn,
                            Endpoint lo, Endpoint hi, std::string name) {
    if (!psi_fn || !psi_prime_fn) {
        throw DomainError("custom transform needs psi and psi' callables");
    }
    Transform t;
    t.kind_ = TransformKind::Custom;
    t.lo_ = lo;
    t.hi_ = hi;
    t.psi_fn_ = std::move(psi_fn);
    t.psi_prime_fn_ = std::move(psi_prime_fn);
    t.name_ = std::move(name);
    return t;
}

bool Transform::contains(double omega) const {
    return lo_.below(omega) && hi_.above(omega);
}

void Transform::require_inside(double omega) const {
    if (!contains(omega)) {
        throw DomainError("omega = " + std::to_string(omega) +
                          " outside the open transform domain");
    }
}

double Transform::psi(double omega) const {
    require_inside(omega);
    switch (kind_) {
        case TransformKind::Exp: return std::exp(omega);
        case TransformKind::Square: return omega * omega;
        case TransformKind::PowerOneMinusAlpha: return std::pow(omega, 1.0 - alpha_);
        case TransformKind::TanHalfPi: return std::tan(omega * std::numbers::pi / 2.0);
        case TransformKind::Rational:
            return std::pow(omega, sigma_) / std::pow(1.0 - omega, rho_);
        case TransformKind::Custom: return psi_fn_(omega);
    }
    return 0.0; // unreachable
}

double Transform::psi_prime(double omega) const {
    require_inside(omega);
    switch (kind_) {
        case TransformKind::Exp: return std::exp(omega);
        case TransformKind::Square: return 2.0 * omega;
        case TransformKind::PowerOneMinusAlpha:
            return (1.0 - alpha_) * std::pow(omega, -alpha_);
        case TransformKind::TanHalfPi: {
            const double c = std::cos(omega * std::numbers::pi / 2.0);
            return (std::numbers::pi / 2.0) / (c * c);
        }
        case TransformKind::Rational:
            return std::pow(omega, sigma_ - 1.0) * std::pow(1.0 - omega, -rho_ - 1.0) *
                   (sigma_ * (1.0 - omega) + rho_ * omega);
        case TransformKind::Custom: return psi_prime_fn_(omega);
    }
    return 0.0; // unreachable
}

double Transform::log_psi(double omega) const {
    require_inside(omega);
    switch (kind_) {
        case TransformKind::Exp: return omega;
        case TransformKind::Square: return 2.0 * std::log(omega);
        case TransformKind::PowerOneMinusAlpha: return (1.0 - alpha_) * std::log(omega);
        case TransformKind::TanHalfPi:
            return std::log(std::tan(omega * std::numbers::pi / 2.0));
        case TransformKind::Rational:
            return sigma_ * std::log(omega) - rho_ * std::log(1.0 - omega);
        case TransformKind::Custom: return std::log(psi_fn_(omega));
    }
    return 0.0; // unreachable
}

double Transform::log_psi_prime(double omega) const {
    require_inside(omega);
    switch (kind_) {
        case TransformKind::Exp: return omega;
        case TransformKind::Square: return std::log(2.0 * omega);
        case TransformKind::PowerOneMinusAlpha:
            return std::log(1.0 - alpha_) - alpha_ * std::log(omega);
        case TransformKind::TanHalfPi: {
            const double c = std::cos(omega * std::numbers::pi / 2.0);
            return std::log(std::numbers::pi / 2.0) - 2.0 * std::log(std::abs(c));
        }
        case TransformKind::Rational:
            return (sigma_ - 1.0) * std::log(omega) - (rho_ + 1.0) * std::log(1.0 - omega) +
                   std::log(sigma_ * (1.0 - omega) + rho_ * omega);
        case TransformKind::Custom: return std::log(psi_prime_fn_(omega));
    }
    return 0.0; // unreachable
}

Transform transform_from_name(const std::string& name, double alpha, double sigma, double rho) {
    if (name == "exp") return Transform::exp();
    if (name == "square") return Transform::square();
    if (name == "power") return Transform::power_one_minus_alpha(alpha);
    if (name == "tan") return Transform::tan_half_pi();
    if (name == "rational") return Transform::rational(sigma, rho);
    throw ConfigError("unknown transform '" + name + "'");
}

namespace {

// Graded probe mesh over the open domain. Infinite endpoints are
// approached far enough that psi passes below 1e-6 / above 1e6; finite
// endpoints are approached geometrically down to ~1e-9 distances.
std::vector<double> probe_mesh(const Transform& t, std::size_t count) {
    std::vector<double> mesh;
    mesh.reserve(count);
    const Endpoint& lo = t.lower();
    const Endpoint& hi = t.upper();
    const std::size_t last = count - 1;

    if (!lo.is_finite() && !hi.is_finite()) {
        // tanh-spaced, reaching |omega| ~ 40
        const double span = 40.0;
        const double norm = std::tanh(3.0);
        for (std::size_t i = 0; i < count; ++i) {
            const double u = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(last);
            mesh.push_back(span * std::tanh(3.0 * u) / norm);
        }
        return mesh;
    }

    if (lo.is_finite() && !hi.is_finite()) {
        // log-spaced between adaptive bounds so the endpoint evidence is
        // visible for any admissible growth rate
        const double base = lo.value;
        double wlo = 1.0, whi = 1.0;
        for (int i = 0; i < 150 && t.psi(base + wlo) >= 1e-7; ++i) wlo /= 10.0;
        for (int i = 0; i < 150 && t.psi(base + whi) <= 1e7; ++i) whi *= 10.0;
        const double llo = std::log(wlo), lhi = std::log(whi);
        for (std::size_t i = 0; i < count; ++i) {
            const double u = static_cast<double>(i) / static_cast<double>(last);
            mesh.push_back(base + std::exp(llo + u * (lhi - llo)));
        }
        return mesh;
    }

    if (lo.is_finite() && hi.is_finite()) {
        // cluster geometrically toward both endpoints
        const double width = hi.value - lo.value;
        const double dmin = 1e-9;
        auto place = [&](double u) {
            if (u <= 0.5) {
                const double v = u / 0.5;
                return lo.value + width * std::exp(std::log(dmin) + v * (std::log(0.5) - std::log(dmin)));
            }
            const double v = (1.0 - u) / 0.5;
            return hi.value - width * std::exp(std::log(dmin) + v * (std::log(0.5) - std::log(dmin)));
        };
        for (std::size_t i = 0; i < count; ++i) {
            mesh.push_back(place(static_cast<double>(i) / static_cast<double>(last)));
        }
        return mesh;
    }

    throw DomainError("domain with finite upper and infinite lower endpoint is not admissible");
}

} // namespace

AdmissibilityReport check_admissible(const Transform& transform, std::size_t probe_count) {
    if (probe_count < 3) {
        throw RangeError("probe_count must be >= 3");
    }
    const std::vector<double> mesh = probe_mesh(transform, probe_count);

    AdmissibilityReport report;
    report.probe_count = mesh.size();

    std::vector<double> psi_vals(mesh.size());
    double min_prime = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        psi_vals[i] = transform.psi(mesh[i]);
        min_prime = std::min(min_prime, transform.psi_prime(mesh[i]));
    }
    report.min_psi_prime = min_prime;
    report.psi_at_lowest = psi_vals.front();
    report.psi_at_highest = psi_vals.back();
    report.lower_limit_evidence = psi_vals.front() < 1e-6;
    report.upper_limit_evidence = psi_vals.back() > 1e6;

    for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
        if (!(psi_vals[i + 1] > psi_vals[i])) ++report.monotonicity_violations;
    }

    // 4th-order central differences against the analytic derivative.
    // Step scales with the distance to the nearest finite endpoint so the
    // relative truncation stays uniform across power-law and pole-type
    // growth; on the full line a fixed step matches exponential scaling.
    const Endpoint& lo = transform.lower();
    const Endpoint& hi = transform.upper();
    double worst = 0.0;
    for (double w : mesh) {
        double h;
        if (lo.is_finite() && hi.is_finite()) {
            h = 0.004 * std::min(w - lo.value, hi.value - w);
        } else if (lo.is_finite()) {
            h = 0.004 * (w - lo.value);
        } else if (hi.is_finite()) {
            h = 0.004 * (hi.value - w);
        } else {
            h = 0.01;
        }
        // within ~1e-6 of a finite nonzero endpoint the step drowns in the
        // ulp of omega itself; those probes carry the limit evidence, not
        // the derivative check
        if (!(h > 4e-9 * std::max(1.0, std::abs(w)))) continue;
        const double fd = (transform.psi(w - 2.0 * h) - 8.0 * transform.psi(w - h) +
                           8.0 * transform.psi(w + h) - transform.psi(w + 2.0 * h)) /
                          (12.0 * h);
        const double exact = transform.psi_prime(w);
        worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
    }
    report.max_derivative_mismatch = worst;
    return report;
}

} // namespace diffrep
