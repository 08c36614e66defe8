// Truncated Taylor arithmetic (jets) in one and two variables.
//
// Jet1<N> carries the coefficients of f(x0 + e) = sum a_k e^k, k <= N,
// Jet2<N> the coefficients of f(x0 + e1, y0 + e2) up to total degree N.
// Arithmetic is exact in the truncated algebra, so propagating a closed-form
// expression through jets yields its partial derivatives to roundoff.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace cusplab {

template <int N>
struct Jet1 {
    static_assert(N >= 1);
    std::array<double, N + 1> a{};  // a[k] = f^(k)/k!

    static Jet1 constant(double c) {
        Jet1 j;
        j.a[0] = c;
        return j;
    }
    // The running variable itself: value v, unit first-order coefficient.
    static Jet1 variable(double v) {
        Jet1 j;
        j.a[0] = v;
        j.a[1] = 1.0;
        return j;
    }

    double value() const { return a[0]; }
    // k-th derivative (not the raw coefficient).
    double deriv(int k) const {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return a[static_cast<size_t>(k)] * f;
    }

    Jet1 operator+(const Jet1& o) const {
        Jet1 r;
        for (int k = 0; k <= N; ++k) r.a[k] = a[k] + o.a[k];
        return r;
    }
    Jet1 operator-(const Jet1& o) const {
        Jet1 r;
        for (int k = 0; k <= N; ++k) r.a[k] = a[k] - o.a[k];
        return r;
    }
    Jet1 operator-() const {
        Jet1 r;
        for (int k = 0; k <= N; ++k) r.a[k] = -a[k];
        return r;
    }
    Jet1 operator*(double c) const {
        Jet1 r;
        for (int k = 0; k <= N; ++k) r.a[k] = c * a[k];
        return r;
    }
    Jet1 operator*(const Jet1& o) const {
        Jet1 r;
        for (int k = 0; k <= N; ++k) {
            double s = 0.0;
            for (int j = 0; j <= k; ++j) s += a[j] * o.a[k - j];
            r.a[k] = s;
        }
        return r;
    }
    Jet1& operator+=(const Jet1& o) {
        for (int k = 0; k <= N; ++k) a[k] += o.a[k];
        return *this;
    }
};

// b = 1/a via b0 = 1/a0, b_k = -(1/a0) sum_{j=1..k} a_j b_{k-j}.
template <int N>
Jet1<N> recip(const Jet1<N>& x) {
    Jet1<N> r;
    const double inv = 1.0 / x.a[0];
    r.a[0] = inv;
    for (int k = 1; k <= N; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += x.a[j] * r.a[k - j];
        r.a[k] = -inv * s;
    }
    return r;
}

// b = exp(a) via k b_k = sum_{j=1..k} j a_j b_{k-j}.
template <int N>
Jet1<N> exp(const Jet1<N>& x) {
    Jet1<N> r;
    r.a[0] = std::exp(x.a[0]);
    for (int k = 1; k <= N; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * x.a[j] * r.a[k - j];
        r.a[k] = s / k;
    }
    return r;
}

// Two-variable jet truncated at total degree N. Coefficients are stored
// densely as c[i][j] with i + j <= N; c[i][j] = d^{i+j} f / (dx^i dy^j) / (i! j!).
template <int N>
struct Jet2 {
    static_assert(N >= 1);
    std::array<std::array<double, N + 1>, N + 1> c{};

    static Jet2 constant(double v) {
        Jet2 j;
        j.c[0][0] = v;
        return j;
    }
    static Jet2 variable_x(double v) {
        Jet2 j;
        j.c[0][0] = v;
        j.c[1][0] = 1.0;
        return j;
    }
    static Jet2 variable_y(double v) {
        Jet2 j;
        j.c[0][0] = v;
        j.c[0][1] = 1.0;
        return j;
    }

    double value() const { return c[0][0]; }
    // Partial derivative of order (i, j), factorials restored.
    double deriv(int i, int j) const {
        double f = 1.0;
        for (int k = 2; k <= i; ++k) f *= k;
        for (int k = 2; k <= j; ++k) f *= k;
        return c[static_cast<size_t>(i)][static_cast<size_t>(j)] * f;
    }

    Jet2 operator+(const Jet2& o) const {
        Jet2 r;
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j) r.c[i][j] = c[i][j] + o.c[i][j];
        return r;
    }
    Jet2 operator-(const Jet2& o) const {
        Jet2 r;
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j) r.c[i][j] = c[i][j] - o.c[i][j];
        return r;
    }
    Jet2 operator*(double s) const {
        Jet2 r;
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j) r.c[i][j] = s * c[i][j];
        return r;
    }
    Jet2 operator*(const Jet2& o) const {
        Jet2 r;
        for (int i1 = 0; i1 <= N; ++i1)
            for (int j1 = 0; i1 + j1 <= N; ++j1) {
                const double v = c[i1][j1];
                if (v == 0.0) continue;
                for (int i2 = 0; i1 + i2 <= N; ++i2)
                    for (int j2 = 0; i1 + j1 + i2 + j2 <= N; ++j2)
                        r.c[i1 + i2][j1 + j2] += v * o.c[i2][j2];
            }
        return r;
    }
    Jet2& operator+=(const Jet2& o) {
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j) c[i][j] += o.c[i][j];
        return *this;
    }
};

namespace detail {
// Composes the Taylor series sum ck[k] (x - x0)^k; the shifted jet is
// nilpotent of order N+1, so the series terminates after N terms.
template <int N>
Jet2<N> analytic_series(const Jet2<N>& x, const std::array<double, N + 1>& ck) {
    Jet2<N> hat = x;
    hat.c[0][0] = 0.0;
    Jet2<N> pow = Jet2<N>::constant(1.0);
    Jet2<N> r = Jet2<N>::constant(ck[0]);
    for (int k = 1; k <= N; ++k) {
        pow = pow * hat;
        r += pow * ck[k];
    }
    return r;
}
}  // namespace detail

template <int N>
Jet2<N> exp(const Jet2<N>& x) {
    std::array<double, N + 1> ck{};
    const double e0 = std::exp(x.c[0][0]);
    double fact = 1.0;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        ck[k] = e0 / fact;
    }
    return detail::analytic_series<N>(x, ck);
}

template <int N>
Jet2<N> recip(const Jet2<N>& x) {
    std::array<double, N + 1> ck{};
    const double inv = 1.0 / x.c[0][0];
    double p = inv;
    for (int k = 0; k <= N; ++k) {
        ck[k] = p;
        p *= -inv;
    }
    return detail::analytic_series<N>(x, ck);
}

}  // namespace cusplab
