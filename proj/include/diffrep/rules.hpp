#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diffrep/fractional.hpp"
#include "diffrep/transform.hpp"

namespace diffrep {

struct NodesWeights {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Laguerre rule: exact for p(x) e^{-x} on (0, inf) up to degree
/// 2m - 1. Built by Golub-Welsch from the symmetric tridiagonal Jacobi
/// matrix (diagonal 2k+1, off-diagonal k). 1 <= m <= 128.
NodesWeights gauss_laguerre(int m);

/// Gauss-Legendre rule on [-1, 1], exact up to degree 2m - 1.
/// 1 <= m <= 64.
NodesWeights gauss_legendre(int m);

struct RuleMeta {
    std::string method;
    int m_half = 0;
    double horizon = 0.0;
    double split_omega = 0.0;      // center of the two-sided construction
    double truncated_at = 0.0;     // upper omega cut, 0 when the rule is not truncated
    double truncation_bound = 0.0; // envelope integral beyond the cut
};

/// Nodes and weights in omega-space approximating the diffusive integral
/// for one transform and horizon. Immutable after construction and
/// shareable across threads.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleMeta meta;

    std::size_t size() const { return nodes.size(); }
};

/// Builds the omega-space rule serving all t - a <= horizon.
///
/// Exp: the domain splits at omega0 = -log(horizon); each half maps
/// Gauss-Laguerre nodes through the tail decay rates (alpha above,
/// n - alpha below) so the integrand asymptotically matches the Laguerre
/// weight. 2 * m_half nodes.
///
/// Bounded domains (tan, rational): m_half composite Gauss-Legendre panels
/// of order 8, graded geometrically (ratio 2) toward both endpoints.
///
/// Square / power: graded panels on (0, omega_max) where omega_max cuts the
/// upper tail envelope psi' psi^(-alpha-1) at 1e-16 of its reference value;
/// the cut and the envelope integral beyond it land in the meta.
QuadratureRule build_diffusive_rule(const FractionalOrder& order, const Transform& transform,
                                    int m_half, double horizon);

} // namespace diffrep
