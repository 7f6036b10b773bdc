#pragma once

#include <cstddef>
#include <vector>

#include "diffrep/fractional.hpp"
#include "diffrep/oracle.hpp"
#include "diffrep/rules.hpp"
#include "diffrep/source.hpp"
#include "diffrep/transform.hpp"

namespace diffrep {

/// Evaluation points t_1 < ... < t_N with t_1 >= start.
struct TimeGrid {
    double start = 0.0;
    std::vector<double> points;

    TimeGrid(double start_, std::vector<double> points_);

    /// k/N-spaced grid on (a, b]: t_k = a + k (b - a) / n, k = 1..n.
    static TimeGrid uniform(double a, double b, int n);

    bool is_uniform() const;
    std::size_t size() const { return points.size(); }
};

/// Per-node state of the diffusive ODE system at one time. Holds, for each
/// quadrature node m: the kernel value phi_m, the decay rate
/// lambda_m = psi(omega_m), the source coefficient
/// kappa_m = c_alpha psi'(omega_m) psi(omega_m)^(-alpha), and the rule
/// weights. Size depends on the rule only, never on the grid.
///
/// The implicit updates run on the ratio kappa/lambda, which stays finite
/// even where psi overflows the double range; kappa itself may saturate to
/// inf at such nodes.
///
/// A state belongs to one logical thread at a time while it is being
/// stepped. The per-node updates are independent and could be partitioned
/// across workers as long as read_value keeps its fixed ascending
/// reduction order; distinct states march fully in parallel.
class DiffusiveState {
public:
    DiffusiveState(double start, std::vector<double> lambda, std::vector<double> kappa,
                   std::vector<double> ratio, std::vector<double> weights);

    double t_current() const { return t_; }
    std::size_t size() const { return phi_.size(); }
    const std::vector<double>& phi() const { return phi_; }
    const std::vector<double>& lambda() const { return lambda_; }
    const std::vector<double>& kappa() const { return kappa_; }
    const std::vector<double>& weights() const { return weights_; }

    friend void step_backward_euler(DiffusiveState& state, double h, double f_next);
    friend void step_trapezoidal(DiffusiveState& state, double h, double f_cur, double f_next);
    friend double read_value(const DiffusiveState& state);

private:
    double t_;
    std::vector<double> phi_, lambda_, kappa_, ratio_, weights_;
};

/// State at t = start: phi = 0, lambda and kappa precomputed once.
/// The fast path is restricted to 0 < alpha < 1.
DiffusiveState init_state(const FractionalOrder& order, const QuadratureRule& rule,
                          const Transform& transform, double start);

/// phi_m <- (phi_m + h kappa_m f_next) / (1 + h lambda_m), solved in closed
/// form per node; unconditionally stable for any h > 0.
void step_backward_euler(DiffusiveState& state, double h, double f_next);

/// phi_m <- ((1 - h lambda_m/2) phi_m + (h/2) kappa_m (f_cur + f_next))
///          / (1 + h lambda_m/2).
void step_trapezoidal(DiffusiveState& state, double h, double f_cur, double f_next);

/// Quadrature readout sum_m w_m phi_m, accumulated in ascending node order
/// with Kahan compensation.
double read_value(const DiffusiveState& state);

enum class Stepper { BackwardEuler, Trapezoidal };

/// Approximates the fractional integral of f at every grid point with one
/// rule construction and one pass over the grid: O(N * M) time, O(M)
/// memory, no history. The trapezoidal path opens with two damped
/// (backward Euler) half-steps on the first interval; an undamped start
/// leaves the stiff nodes with an O(h) transient that caps the scheme at
/// first order.
std::vector<double> evaluate_on_grid(const FractionalOrder& order, const Transform& transform,
                                     const SourceFunction& f, const TimeGrid& grid, int m_half,
                                     Stepper stepper);

/// Residual of the n-th order kernel ODE at (t, omega), derivatives taken
/// by 4th-order central differences of phi_direct at step h_fd, normalized
/// by the forcing magnitude. Works through the oracle, so any non-integer
/// order with n <= 3 is accepted.
double residual_check_ode(const FractionalOrder& order, const Transform& transform,
                          const SourceFunction& f, double a, double t, double omega,
                          double h_fd);

} // namespace diffrep
