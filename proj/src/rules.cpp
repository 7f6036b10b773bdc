#include "diffrep/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace diffrep {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix together with the first
// component of each normalized eigenvector (all that Golub-Welsch needs).
// Implicit-shift QL; d = diagonal, e = off-diagonal (e.size() == d.size()-1).
void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                             std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    z.assign(d.size(), 0.0);
    z[0] = 1.0;
    if (n == 1) return;
    e.push_back(0.0);

    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (++iter > 60) {
                    throw ConvergenceError("tridiagonal eigen solve failed");
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // sort ascending, carrying the first-row components along
    std::vector<int> idx(d.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(d.size()), zs(d.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        ds[k] = d[idx[k]];
        zs[k] = z[idx[k]];
    }
    d = std::move(ds);
    z = std::move(zs);
}

NodesWeights golub_welsch(std::vector<double> diag, std::vector<double> offdiag, double mu0) {
    std::vector<double> z;
    tridiag_eigen_first_row(diag, offdiag, z);
    NodesWeights rule;
    rule.nodes = std::move(diag);
    rule.weights.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        rule.weights[i] = mu0 * z[i] * z[i];
    }
    return rule;
}

void append_panel_nodes(QuadratureRule& rule, const NodesWeights& gl, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        rule.nodes.push_back(mid + half * gl.nodes[i]);
        rule.weights.push_back(half * gl.weights[i]);
    }
}

QuadratureRule graded_panel_rule(double lo, double hi, int panels_low, int panels_high,
                                 double center) {
    const NodesWeights gl = gauss_legendre(8);
    QuadratureRule rule;

    std::vector<double> bounds;
    if (panels_low > 0) {
        // toward the lower endpoint: boundaries center/2, center/4, ...
        std::vector<double> rel;
        double x = center - lo;
        for (int i = 0; i < panels_low - 1; ++i) {
            x /= 2.0;
            rel.push_back(lo + x);
        }
        bounds.push_back(lo);
        for (auto it = rel.rbegin(); it != rel.rend(); ++it) bounds.push_back(*it);
        bounds.push_back(center);
    } else {
        bounds.push_back(center);
    }
    {
        std::vector<double> rel;
        double x = hi - center;
        for (int i = 0; i < panels_high - 1; ++i) {
            x /= 2.0;
            rel.push_back(hi - x);
        }
        std::sort(rel.begin(), rel.end());
        for (double v : rel) bounds.push_back(v);
        if (panels_high > 0) bounds.push_back(hi);
    }

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        append_panel_nodes(rule, gl, bounds[i], bounds[i + 1]);
    }
    return rule;
}

// Upper omega beyond which the tail envelope psi' psi^(-alpha-1) falls
// under 1e-16 of its value at the scale point psi = 1.
double envelope_cut(const Transform& t, double alpha) {
    auto log_env = [&](double w) { return t.log_psi_prime(w) - (alpha + 1.0) * t.log_psi(w); };
    // scale point: psi(w_ref) = 1
    double w_ref = 1.0;
    {
        double lo = 1e-12, hi = 1e12;
        for (int i = 0; i < 200; ++i) {
            w_ref = std::sqrt(lo * hi);
            (t.log_psi(w_ref) < 0.0 ? lo : hi) = w_ref;
        }
    }
    const double target = log_env(w_ref) + std::log(1e-16);
    double lo = w_ref, hi = w_ref;
    for (int i = 0; i < 400 && log_env(hi) > target; ++i) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        (log_env(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

} // namespace

NodesWeights gauss_laguerre(int m) {
    if (m < 1 || m > 128) {
        throw RangeError("gauss_laguerre supports 1 <= m <= 128, got " + std::to_string(m));
    }
    std::vector<double> diag(m), off(std::max(0, m - 1));
    for (int k = 0; k < m; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < m; ++k) off[k - 1] = static_cast<double>(k);
    return golub_welsch(std::move(diag), std::move(off), 1.0);
}

NodesWeights gauss_legendre(int m) {
    if (m < 1 || m > 64) {
        throw RangeError("gauss_legendre supports 1 <= m <= 64, got " + std::to_string(m));
    }
    std::vector<double> diag(m, 0.0), off(std::max(0, m - 1));
    for (int k = 1; k < m; ++k) {
        off[k - 1] = static_cast<double>(k) / std::sqrt(4.0 * k * k - 1.0);
    }
    return golub_welsch(std::move(diag), std::move(off), 2.0);
}

QuadratureRule build_diffusive_rule(const FractionalOrder& order, const Transform& transform,
                                    int m_half, double horizon) {
    if (m_half < 1) {
        throw RangeError("m_half must be >= 1, got " + std::to_string(m_half));
    }
    if (!(horizon > 0.0)) {
        throw RangeError("horizon must be > 0");
    }

    const double alpha = order.alpha;
    const double rate_up = alpha;
    const double rate_lo = static_cast<double>(order.n) - alpha;

    switch (transform.kind()) {
        case TransformKind::Exp: {
            if (m_half > 128) {
                throw RangeError("m_half capped at 128 for the exp transform");
            }
            // Two-sided construction around the horizon-scale transition at
            // omega0 = -log(horizon). The kernel decays like e^{-alpha w}
            // above and e^{(n-alpha) w} below, so beyond a window around
            // omega0 each tail maps Gauss-Laguerre nodes through its decay
            // rate (the e^{x} factor folds the Laguerre weight back into
            // plain omega-space weights). Inside the window the transition
            // factor is resolved by Gauss-Legendre panels; feeding it to
            // the Laguerre tails instead stalls the convergence well above
            // the accuracy this rule must reach.
            const double split = -std::log(horizon);
            const double below = 4.0 + 2.0 / rate_lo;
            const double above = 4.0;
            const int m_tail = std::max(1, m_half / 3);
            const int m_center = 2 * (m_half - m_tail);

            const NodesWeights lag = gauss_laguerre(m_tail);
            std::vector<std::pair<double, double>> entries;
            entries.reserve(2 * m_half);
            for (int i = 0; i < m_tail; ++i) {
                const double x = lag.nodes[i];
                const double w = lag.weights[i] * std::exp(x);
                entries.emplace_back(split - below - x / rate_lo, w / rate_lo);
                entries.emplace_back(split + above + x / rate_up, w / rate_up);
            }
            if (m_center > 0) {
                const int panels = std::max(1, m_center / 8);
                const int base = m_center / panels;
                const int rem = m_center % panels;
                const double width = (below + above) / panels;
                double left = split - below;
                for (int p = 0; p < panels; ++p) {
                    const int order = base + (p < rem ? 1 : 0);
                    const NodesWeights gl = gauss_legendre(order);
                    const double mid = left + 0.5 * width;
                    for (int i = 0; i < order; ++i) {
                        entries.emplace_back(mid + 0.5 * width * gl.nodes[i],
                                             0.5 * width * gl.weights[i]);
                    }
                    left += width;
                }
            }
            std::sort(entries.begin(), entries.end());

            QuadratureRule rule;
            rule.nodes.reserve(entries.size());
            rule.weights.reserve(entries.size());
            for (const auto& [node, weight] : entries) {
                rule.nodes.push_back(node);
                rule.weights.push_back(weight);
            }
            rule.meta = {"laguerre-legendre-two-sided", m_half, horizon, split, 0.0, 0.0};
            return rule;
        }

        case TransformKind::TanHalfPi:
        case TransformKind::Rational: {
            const double lo = transform.lower().value;
            const double hi = transform.upper().value;
            const int nlo = (m_half + 1) / 2;
            const int nhi = m_half - nlo;
            QuadratureRule rule = graded_panel_rule(lo, hi, nlo, std::max(nhi, 0),
                                                    nhi == 0 ? hi : 0.5 * (lo + hi));
            rule.meta = {"graded-panels", m_half, horizon, 0.5 * (lo + hi), 0.0, 0.0};
            return rule;
        }

        case TransformKind::Square:
        case TransformKind::PowerOneMinusAlpha: {
            // half-line domain: graded panels on (0, cut), upper side
            // geometric with ratio 2 until the envelope cut
            const double cut = envelope_cut(transform, alpha);
            const int nlo = (m_half + 1) / 2;
            const int nhi = m_half - nlo;
            const double center = 1.0;
            QuadratureRule rule;
            const NodesWeights gl = gauss_legendre(8);
            // lower side, graded toward 0
            {
                std::vector<double> bounds{0.0};
                std::vector<double> rel;
                double x = center;
                for (int i = 0; i < nlo - 1; ++i) {
                    x /= 2.0;
                    rel.push_back(x);
                }
                for (auto it = rel.rbegin(); it != rel.rend(); ++it) bounds.push_back(*it);
                bounds.push_back(center);
                for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
                    append_panel_nodes(rule, gl, bounds[i], bounds[i + 1]);
                }
            }
            // upper side, geometric until the cut
            double truncated_at = center;
            {
                double left = center;
                for (int i = 0; i < nhi && left < cut; ++i) {
                    const double right = std::min(left * 2.0, cut);
                    append_panel_nodes(rule, gl, left, right);
                    left = right;
                }
                truncated_at = left;
            }
            // envelope integral beyond the cut: c_alpha (n-1)! * integral of
            // psi' psi^(-alpha-1) = c_alpha (n-1)! psi(cut)^(-alpha) / alpha
            double fact = 1.0;
            for (int i = 2; i < order.n; ++i) fact *= i;
            const double tail_bound =
                std::abs(order.c_alpha) * fact *
                std::exp(-alpha * transform.log_psi(truncated_at)) / alpha;
            rule.meta = {"graded-panels-truncated", m_half, horizon, center, truncated_at,
                         tail_bound};
            return rule;
        }

        case TransformKind::Custom: {
            if (transform.lower().is_finite() && transform.upper().is_finite()) {
                const double lo = transform.lower().value;
                const double hi = transform.upper().value;
                const int nlo = (m_half + 1) / 2;
                const int nhi = m_half - nlo;
                QuadratureRule rule = graded_panel_rule(lo, hi, nlo, std::max(nhi, 0),
                                                        nhi == 0 ? hi : 0.5 * (lo + hi));
                rule.meta = {"graded-panels", m_half, horizon, 0.5 * (lo + hi), 0.0, 0.0};
                return rule;
            }
            throw UnsupportedTransformError(
                "custom transforms on unbounded domains have no rule construction");
        }
    }
    throw UnsupportedTransformError("unhandled transform kind");
}

} // namespace diffrep
