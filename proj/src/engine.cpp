#include "diffrep/engine.hpp"

#include <cmath>
#include <limits>

namespace diffrep {

TimeGrid::TimeGrid(double start_, std::vector<double> points_)
    : start(start_), points(std::move(points_)) {
    if (points.empty()) {
        throw DomainError("time grid must be nonempty");
    }
    if (points.front() < start) {
        throw DomainError("first grid point must be >= start");
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i] < points[i + 1])) {
            throw DomainError("grid points must be strictly increasing");
        }
    }
}

TimeGrid TimeGrid::uniform(double a, double b, int n) {
    if (!(b > a)) {
        throw DomainError("uniform grid needs b > a");
    }
    if (n < 1) {
        throw RangeError("uniform grid needs n >= 1");
    }
    std::vector<double> pts(n);
    for (int k = 1; k <= n; ++k) {
        pts[k - 1] = a + (b - a) * (static_cast<double>(k) / static_cast<double>(n));
    }
    return TimeGrid(a, std::move(pts));
}

bool TimeGrid::is_uniform() const {
    if (points.size() < 2) return true;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    double prev = start;
    for (double t : points) {
        const double h = t - prev;
        lo = std::min(lo, h);
        hi = std::max(hi, h);
        prev = t;
    }
    return hi - lo < 1e-12;
}

DiffusiveState::DiffusiveState(double start, std::vector<double> lambda,
                               std::vector<double> kappa, std::vector<double> ratio,
                               std::vector<double> weights)
    : t_(start),
      phi_(lambda.size(), 0.0),
      lambda_(std::move(lambda)),
      kappa_(std::move(kappa)),
      ratio_(std::move(ratio)),
      weights_(std::move(weights)) {}

DiffusiveState init_state(const FractionalOrder& order, const QuadratureRule& rule,
                          const Transform& transform, double start) {
    if (!(order.alpha > 0.0 && order.alpha < 1.0)) {
        throw OrderOutOfRangeError("fast path needs 0 < alpha < 1, got " +
                                   std::to_string(order.alpha));
    }
    if (rule.size() == 0) {
        throw RangeError("quadrature rule is empty");
    }
    const std::size_t m = rule.size();
    std::vector<double> lambda(m), kappa(m), ratio(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double w = rule.nodes[i];
        const double lp = transform.log_psi(w);
        const double lpp = transform.log_psi_prime(w);
        lambda[i] = std::exp(lp);
        kappa[i] = order.c_alpha * std::exp(lpp - order.alpha * lp);
        // kappa/lambda in log space: finite wherever the tail envelope is
        ratio[i] = order.c_alpha * std::exp(lpp - (order.alpha + 1.0) * lp);
    }
    return DiffusiveState(start, std::move(lambda), std::move(kappa), std::move(ratio),
                          rule.weights);
}

void step_backward_euler(DiffusiveState& state, double h, double f_next) {
    if (!(h > 0.0)) {
        throw DomainError("step size must be > 0");
    }
    const std::size_t m = state.phi_.size();
    for (std::size_t i = 0; i < m; ++i) {
        // phi <- (phi + h kappa f)/(1 + q), q = h lambda. kappa can
        // overflow where q is huge and kappa/lambda where q is tiny, so
        // the forcing switches between the two equivalent forms; each is
        // finite on its side of the branch.
        const double q = h * state.lambda_[i];
        const double decay = 1.0 / (1.0 + q);
        const double force = (q > 1.0) ? state.ratio_[i] / (1.0 + 1.0 / q)
                                       : h * state.kappa_[i] * decay;
        state.phi_[i] = decay * state.phi_[i] + force * f_next;
    }
    state.t_ += h;
}

void step_trapezoidal(DiffusiveState& state, double h, double f_cur, double f_next) {
    if (!(h > 0.0)) {
        throw DomainError("step size must be > 0");
    }
    const std::size_t m = state.phi_.size();
    for (std::size_t i = 0; i < m; ++i) {
        // phi <- ((1 - q/2) phi + (h/2) kappa (f0 + f1))/(1 + q/2),
        // q = h lambda, with the same extreme-q-safe branches as in the
        // backward Euler update.
        const double q = h * state.lambda_[i];
        double decay, force;
        if (q > 2.0) {
            const double r = 2.0 / q; // 0 at q = inf
            decay = (r - 1.0) / (r + 1.0);
            force = state.ratio_[i] / (r + 1.0);
        } else {
            const double e = 1.0 / (1.0 + 0.5 * q);
            decay = (1.0 - 0.5 * q) * e;
            force = 0.5 * h * state.kappa_[i] * e;
        }
        state.phi_[i] = decay * state.phi_[i] + force * (f_cur + f_next);
    }
    state.t_ += h;
}

double read_value(const DiffusiveState& state) {
    double sum = 0.0, comp = 0.0;
    const std::size_t m = state.phi_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double term = state.weights_[i] * state.phi_[i] - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return sum;
}

std::vector<double> evaluate_on_grid(const FractionalOrder& order, const Transform& transform,
                                     const SourceFunction& f, const TimeGrid& grid, int m_half,
                                     Stepper stepper) {
    const double a = grid.start;
    std::vector<double> out;
    out.reserve(grid.size());

    const double horizon = grid.points.back() - a;
    if (horizon == 0.0) {
        // single point at the start: the initial condition
        return {0.0};
    }

    const QuadratureRule rule = build_diffusive_rule(order, transform, m_half, horizon);
    DiffusiveState state = init_state(order, rule, transform, a);

    double t_prev = a;
    double f_prev = (stepper == Stepper::Trapezoidal) ? f(a) : 0.0;
    bool first_step = true;
    for (double t : grid.points) {
        const double h = t - t_prev;
        if (h == 0.0) {
            out.push_back(read_value(state)); // t_1 == a
            continue;
        }
        const double f_next = f(t);
        if (stepper == Stepper::BackwardEuler) {
            step_backward_euler(state, h, f_next);
        } else if (first_step) {
            step_backward_euler(state, 0.5 * h, f(t_prev + 0.5 * h));
            step_backward_euler(state, 0.5 * h, f_next);
        } else {
            step_trapezoidal(state, h, f_prev, f_next);
        }
        first_step = false;
        f_prev = f_next;
        t_prev = t;
        out.push_back(read_value(state));
    }
    return out;
}

namespace {

// 4th-order central stencils for derivative orders 1..3.
double central_derivative(const std::function<double(double)>& g, double t, int k, double h) {
    switch (k) {
        case 0: return g(t);
        case 1:
            return (g(t - 2 * h) - 8.0 * g(t - h) + 8.0 * g(t + h) - g(t + 2 * h)) / (12.0 * h);
        case 2:
            return (-g(t - 2 * h) + 16.0 * g(t - h) - 30.0 * g(t) + 16.0 * g(t + h) -
                    g(t + 2 * h)) /
                   (12.0 * h * h);
        case 3:
            return (g(t - 3 * h) - 8.0 * g(t - 2 * h) + 13.0 * g(t - h) - 13.0 * g(t + h) +
                    8.0 * g(t + 2 * h) - g(t + 3 * h)) /
                   (8.0 * h * h * h);
        default:
            throw RangeError("derivative order " + std::to_string(k) + " not supported");
    }
}

double binom_small(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

double residual_check_ode(const FractionalOrder& order, const Transform& transform,
                          const SourceFunction& f, double a, double t, double omega,
                          double h_fd) {
    if (!(h_fd > 0.0)) {
        throw RangeError("h_fd must be > 0");
    }
    if (!(t > a)) {
        throw DomainError("t must be interior, got t <= a");
    }
    const int n = order.n;
    if (n > 3) {
        throw RangeError("residual check implemented for n <= 3");
    }

    const double psi = transform.psi(omega);
    const double psi_prime = transform.psi_prime(omega);

    const double tol = 1e-12;
    auto phi = [&](double s) { return phi_direct(order, transform, f, a, s, omega, tol); };

    double lhs = 0.0;
    for (int k = 0; k <= n; ++k) {
        lhs += binom_small(n, k) * std::pow(psi, n - k) * central_derivative(phi, t, k, h_fd);
    }
    double fact = 1.0;
    for (int i = 2; i < n; ++i) fact *= i;
    const double forcing = order.c_alpha * psi_prime *
                           std::pow(psi, static_cast<double>(n) - 1.0 - order.alpha) * fact *
                           f(t);
    const double denom = std::abs(forcing);
    const double residual = std::abs(lhs - forcing);
    return (denom > 0.0) ? residual / denom : residual;
}

} // namespace diffrep
