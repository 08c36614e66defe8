// Radon transform of planar fields and its s-derivatives.
//
// R(s, omega, v) = integral of v over the line {x . omega = s}. Derivatives
// in s fall on the integrand as powers of the directional derivative
// (omega . grad)^k, which the field supplies exactly through jets.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "cusplab/quadrature.hpp"

namespace cusplab {

inline constexpr int kMaxRadonOrder = 3;

struct LineQuadSpec {
    int panels = 4;   // panels per chord interval
    int points = 12;  // Gauss-Legendre points per panel
};

// All s-derivative orders 0..4 of R(s, omega, v) in one pass over the line.
// `omega` must be unit length for the directional derivatives to equal d/ds.
template <typename Field>
std::array<double, kMaxDerivOrder + 1> radon_all_orders(const Field& v, double s, Vec2 omega,
                                                        const LineQuadSpec& q) {
    const Vec2 perp = omega.perp();
    const auto parts = v.line_p_intervals(s, omega);
    std::array<double, kMaxDerivOrder + 1> out{};
    if (parts.empty()) return out;
    const GaussRule& rule = cached_gauss_rule(q.points);
    for (const auto& [lo, hi] : parts) {
        const double dw = (hi - lo) / q.panels;
        for (int p = 0; p < q.panels; ++p) {
            const double a = lo + p * dw;
            const double mid = a + 0.5 * dw, half = 0.5 * dw;
            for (size_t k = 0; k < rule.nodes.size(); ++k) {
                const double pp = mid + half * rule.nodes[k];
                const Vec2 x{s * omega.x + pp * perp.x, s * omega.y + pp * perp.y};
                const auto jet = v.jet_along(x, omega);
                const double w = half * rule.weights[k];
                for (int d = 0; d <= kMaxDerivOrder; ++d) out[d] += w * jet.a[d];
            }
        }
    }
    double fact = 1.0;
    for (int d = 2; d <= kMaxDerivOrder; ++d) {
        fact *= d;
        out[d] *= fact;
    }
    return out;
}

// Spec-facing operation: d^k/ds^k R(s, omega, v) for k in 0..3.
template <typename Field>
double radon(const Field& v, double s, Vec2 omega, int deriv_order,
             const LineQuadSpec& q = {}) {
    if (deriv_order < 0 || deriv_order > kMaxRadonOrder)
        throw std::invalid_argument("radon: deriv_order must be in 0..3");
    if (std::abs(omega.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("radon: omega must be a unit vector");
    return radon_all_orders(v, s, omega, q)[deriv_order];
}

}  // namespace cusplab
