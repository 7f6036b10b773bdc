#include "diffrep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "diffrep/rules.hpp"

namespace diffrep {

namespace {

struct Panel {
    double a, b;
    double value;
    double err;
};

struct WorstFirst {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

double g15(const std::function<double(double)>& f, double a, double b,
           const NodesWeights& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * acc;
}

void validate_tol(double tol) {
    if (!(tol > 0.0) || tol > 1e-3) {
        throw RangeError("tol must be in (0, 1e-3], got " + std::to_string(tol));
    }
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, std::size_t max_panels) {
    if (a == b) return 0.0;
    static const NodesWeights rule = gauss_legendre(15);

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
    double total = g15(f, a, b, rule);
    double total_err = std::numeric_limits<double>::infinity();
    queue.push({a, b, total, total_err});
    std::size_t panels = 1;

    const double span = std::abs(b - a);
    while (total_err > tol * std::max(1.0, std::abs(total))) {
        if (queue.empty()) break;
        Panel worst = queue.top();
        if (worst.err == 0.0) break; // everything left is converged
        queue.pop();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b) || (worst.b - worst.a) < 1e-15 * span) {
            // interval no longer splittable in double precision
            if (std::isinf(worst.err)) {
                total_err = 0.0;
            } else {
                total_err = std::max(total_err - worst.err, 0.0);
            }
            worst.err = 0.0;
            queue.push(worst);
            continue;
        }
        if (++panels > max_panels) {
            throw ToleranceNotMetError("panel budget exhausted in adaptive quadrature");
        }
        const double left = g15(f, worst.a, mid, rule);
        const double right = g15(f, mid, worst.b, rule);
        const double two_level = std::abs(worst.value - (left + right));

        total += (left + right) - worst.value;
        if (std::isinf(worst.err)) {
            total_err = two_level;
        } else {
            total_err = std::max(total_err + two_level - worst.err, 0.0);
        }
        queue.push({worst.a, mid, left, 0.5 * two_level});
        queue.push({mid, worst.b, right, 0.5 * two_level});
    }
    return total;
}

double phi_direct(const FractionalOrder& order, const Transform& transform,
                  const SourceFunction& f, double a, double t, double omega, double tol) {
    validate_tol(tol);
    if (t < a) {
        throw DomainError("t must be >= a");
    }
    const double psi = transform.psi(omega); // validates omega
    if (t == a) return 0.0;

    const double psi_prime = transform.psi_prime(omega);
    const int n = order.n;
    const double prefactor =
        order.c_alpha * psi_prime * std::pow(psi, static_cast<double>(n) - order.alpha - 1.0);

    auto integrand = [&](double tau) {
        const double d = t - tau;
        const double poly = (n == 1) ? 1.0 : std::pow(d, n - 1);
        return poly * std::exp(-d * psi) * f(tau);
    };

    // The e^{-(t-tau) psi} layer has width 1/psi, which can sit far below
    // the spacing of representable tau near t. Split the layer off and
    // integrate it in the scaled variable rho = (t - tau) psi, where it is
    // O(1) wide regardless of stiffness.
    double integral;
    if (psi * (t - a) > 50.0) {
        auto layer = [&](double rho) {
            const double poly = (n == 1) ? 1.0 : std::pow(rho / psi, n - 1);
            return poly * std::exp(-rho) * f(t - rho / psi);
        };
        integral = integrate_adaptive(layer, 0.0, 30.0, tol) / psi;
        const double split = t - 30.0 / psi;
        if (split > a) {
            integral += integrate_adaptive(integrand, a, split, tol);
        }
    } else {
        integral = integrate_adaptive(integrand, a, t, tol);
    }
    return prefactor * integral;
}

double rl_direct(const FractionalOrder& order, const SourceFunction& f, double a, double t,
                 double tol) {
    validate_tol(tol);
    if (t < a) {
        throw DomainError("t must be >= a");
    }
    if (t == a) return 0.0;

    const double alpha = order.alpha;
    const double alpha_frac = alpha - static_cast<double>(order.n) + 1.0; // in (0, 1)
    const double upper = std::pow(t - a, alpha_frac);
    const double expo = alpha / alpha_frac - 1.0;

    auto integrand = [&](double s) {
        const double poly = (expo == 0.0) ? 1.0 : std::pow(s, expo);
        return poly * f(t - std::pow(s, 1.0 / alpha_frac));
    };
    const double integral = integrate_adaptive(integrand, 0.0, upper, tol);
    return integral / (gamma_fn(alpha) * alpha_frac);
}

std::vector<std::pair<double, double>> phi_decay_probe(const FractionalOrder& order,
                                                       const Transform& transform,
                                                       const SourceFunction& f, double a,
                                                       double t,
                                                       const std::vector<double>& omegas) {
    if (!(t > a)) {
        throw DomainError("decay probe needs t > a");
    }
    for (std::size_t i = 0; i + 1 < omegas.size(); ++i) {
        if (!(omegas[i] < omegas[i + 1])) {
            throw DomainError("probe omegas must be sorted ascending");
        }
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(omegas.size());
    for (double w : omegas) {
        const double phi = phi_direct(order, transform, f, a, t, w, 1e-10);
        out.emplace_back(transform.psi(w), std::abs(phi));
    }
    return out;
}

} // namespace diffrep
