#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "diffrep/fractional.hpp"
#include "diffrep/source.hpp"
#include "diffrep/transform.hpp"

namespace diffrep {

/// Globally refined adaptive quadrature: composite 15-point Gauss panels,
/// worst panel halved until the two-level estimate difference drops under
/// tol * max(1, |integral|). Throws ToleranceNotMet once the panel budget
/// is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, std::size_t max_panels = std::size_t{1} << 14);

/// Reference evaluation of the diffusive kernel
///   phi(t, omega) = c_alpha psi'(omega) psi(omega)^(n-alpha-1)
///                   * int_a^t (t - tau)^(n-1) e^{-(t - tau) psi(omega)} f(tau) dtau
/// by direct adaptive quadrature, with a pre-split of the boundary layer at
/// tau = t - 30/psi when psi * (t - a) > 50.
double phi_direct(const FractionalOrder& order, const Transform& transform,
                  const SourceFunction& f, double a, double t, double omega, double tol);

/// Reference evaluation of the fractional integral
///   1/Gamma(alpha) int_a^t (t - tau)^(alpha-1) f(tau) dtau.
/// The endpoint singularity is removed by the substitution
/// tau = t - s^(1/alpha_frac) with alpha_frac = alpha - n + 1, which keeps a
/// single code path for every non-integer order.
double rl_direct(const FractionalOrder& order, const SourceFunction& f, double a, double t,
                 double tol);

/// (psi(omega), |phi(t, omega)|) pairs for tail-slope fitting. Probes must
/// be sorted ascending and inside the domain.
std::vector<std::pair<double, double>> phi_decay_probe(const FractionalOrder& order,
                                                       const Transform& transform,
                                                       const SourceFunction& f, double a,
                                                       double t,
                                                       const std::vector<double>& omegas);

} // namespace diffrep
