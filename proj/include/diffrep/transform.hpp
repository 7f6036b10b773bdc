#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "diffrep/errors.hpp"

namespace diffrep {

/// Tagged extended-real endpoint of an open interval. Infinities are kept
/// symbolic so that interval arithmetic never touches floating-point inf.
struct Endpoint {
    enum class Tag { Finite, NegInf, PosInf };

    Tag tag = Tag::Finite;
    double value = 0.0;

    static Endpoint finite(double v) { return {Tag::Finite, v}; }
    static Endpoint neg_inf() { return {Tag::NegInf, 0.0}; }
    static Endpoint pos_inf() { return {Tag::PosInf, 0.0}; }

    bool is_finite() const { return tag == Tag::Finite; }
    bool below(double omega) const; // endpoint lies strictly below omega
    bool above(double omega) const; // endpoint lies strictly above omega
};

enum class TransformKind { Exp, Square, PowerOneMinusAlpha, TanHalfPi, Rational, Custom };

/// A strictly increasing, positive C^1 map psi from an open interval onto
/// (0, inf). Carries the closed-form evaluation of psi and psi' for the
/// built-in variants:
///
///   Exp:                (-inf, inf) -> e^w
///   Square:             (0, inf)    -> w^2
///   PowerOneMinusAlpha: (0, inf)    -> w^(1-alpha), 0 < alpha < 1
///   TanHalfPi:          (0, 1)      -> tan(w pi/2)
///   Rational:           (0, 1)      -> w^sigma / (1-w)^rho, sigma, rho > 0
///
/// User-defined maps go through the same interface via Transform::custom.
/// Instances are immutable after construction; evaluation is pure and safe
/// from any number of threads.
class Transform {
public:
    static Transform exp();
    static Transform square();
    static Transform power_one_minus_alpha(double alpha);
    static Transform tan_half_pi();
    static Transform rational(double sigma, double rho);
    static Transform custom(std::function<double(double)> psi_fn,
                            std::function<double(double)> psi_prime_fn,
                            Endpoint lo, Endpoint hi, std::string name = "custom");

    /// psi(omega); omega must lie strictly inside the open domain.
    double psi(double omega) const;

    /// Analytic derivative psi'(omega).
    double psi_prime(double omega) const;

    /// log(psi(omega)) evaluated without overflow for the built-in
    /// variants. Falls back to log(psi(omega)) for custom maps.
    double log_psi(double omega) const;

    /// log(psi'(omega)), same overflow guarantees as log_psi.
    double log_psi_prime(double omega) const;

    bool contains(double omega) const;

    TransformKind kind() const { return kind_; }
    const Endpoint& lower() const { return lo_; }
    const Endpoint& upper() const { return hi_; }
    double sigma() const { return sigma_; }
    double rho() const { return rho_; }
    double alpha_link() const { return alpha_; }
    const std::string& name() const { return name_; }

private:
    Transform() = default;
    void require_inside(double omega) const;

    TransformKind kind_ = TransformKind::Exp;
    Endpoint lo_, hi_;
    double sigma_ = 0.0, rho_ = 0.0, alpha_ = 0.0;
    std::function<double(double)> psi_fn_, psi_prime_fn_;
    std::string name_;
};

/// Parse a CLI transform name: exp|square|power|tan|rational.
/// `power` needs the order's alpha; `rational` needs sigma and rho.
Transform transform_from_name(const std::string& name, double alpha, double sigma, double rho);

/// Result of probing a transform on a graded mesh over its domain.
struct AdmissibilityReport {
    std::size_t probe_count = 0;
    double min_psi_prime = 0.0;
    int monotonicity_violations = 0;
    double max_derivative_mismatch = 0.0; // relative, psi' vs central differences
    double psi_at_lowest = 0.0;
    double psi_at_highest = 0.0;
    bool lower_limit_evidence = false; // psi at the most extreme low probe < 1e-6
    bool upper_limit_evidence = false; // psi at the most extreme high probe > 1e6

    bool ok() const {
        return monotonicity_violations == 0 && min_psi_prime > 0.0 &&
               max_derivative_mismatch < 1e-6 && lower_limit_evidence && upper_limit_evidence;
    }
};

/// Samples `probe_count` points on a graded mesh covering the domain
/// (tanh-spaced for the full line, log-spaced for half lines, clustered
/// geometrically toward both endpoints for bounded intervals), then checks
/// positivity and monotonicity of psi, agreement of psi' with finite
/// differences, and endpoint-limit evidence. Failures are reported, not
/// thrown.
AdmissibilityReport check_admissible(const Transform& transform, std::size_t probe_count);

} // namespace diffrep
