// Gauss-Legendre rules and composite quadrature over interval unions.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cusplab/field.hpp"

namespace cusplab {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Nodes via Newton on P_n with the usual Chebyshev initial guess.
inline GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[n - 1 - i] = r.weights[i];
    }
    return r;
}

inline const GaussRule& cached_gauss_rule(int n) {
    static thread_local std::vector<GaussRule> cache;
    if (static_cast<size_t>(n) >= cache.size()) cache.resize(n + 1);
    if (cache[n].nodes.empty()) cache[n] = gauss_legendre(n);
    return cache[n];
}

// Composite Gauss-Legendre over a union of disjoint intervals, each split
// into `panels` equal panels. `f` is any callable double -> double.
template <typename F>
double integrate_intervals(const std::vector<Interval>& parts, int panels, int points, F&& f) {
    const GaussRule& rule = cached_gauss_rule(points);
    double total = 0.0;
    for (const auto& [lo, hi] : parts) {
        if (!(hi > lo)) continue;
        const double dw = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double a = lo + p * dw;
            const double mid = a + 0.5 * dw, half = 0.5 * dw;
            double acc = 0.0;
            for (size_t k = 0; k < rule.nodes.size(); ++k)
                acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
            total += half * acc;
        }
    }
    return total;
}

}  // namespace cusplab
