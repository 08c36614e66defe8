// Compactly supported smooth Cauchy data built from standard bump atoms.
//
// Every atom is amp * exp(-1 / (1 - |x-c|^2 / rho^2)) inside |x-c| < rho and
// identically zero outside, so fields and all their derivatives are exact
// closed forms. Derivatives are evaluated by pushing jets through the
// expression, never by differencing.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cusplab/core.hpp"
#include "cusplab/jet.hpp"

namespace cusplab {

inline constexpr int kMaxDerivOrder = 4;

struct BumpAtom {
    Vec2 center;
    double rho = 0.0;
    double amp = 0.0;
};

using Interval = std::pair<double, double>;

namespace detail {

// Below this distance-squared margin the bump value is below double
// underflow, so the jet is exactly zero; also keeps 1/w powers finite.
inline constexpr double kWFloor = 1e-6;

inline std::vector<Interval> merge_intervals(std::vector<Interval> iv) {
    if (iv.empty()) return iv;
    std::sort(iv.begin(), iv.end());
    std::vector<Interval> out;
    out.push_back(iv.front());
    for (size_t i = 1; i < iv.size(); ++i) {
        if (iv[i].first <= out.back().second)
            out.back().second = std::max(out.back().second, iv[i].second);
        else
            out.push_back(iv[i]);
    }
    return out;
}

}  // namespace detail

class SmoothField {
  public:
    SmoothField() = default;
    SmoothField(std::vector<BumpAtom> atoms, double support_radius)
        : atoms_(std::move(atoms)), support_radius_(support_radius) {}

    double support_radius() const { return support_radius_; }
    const std::vector<BumpAtom>& atoms() const { return atoms_; }
    bool is_zero() const { return atoms_.empty(); }

    double eval(Vec2 x) const {
        double v = 0.0;
        for (const auto& at : atoms_) {
            const double u = (x - at.center).norm2() / (at.rho * at.rho);
            const double w = 1.0 - u;
            if (w > 0.0) v += at.amp * std::exp(-1.0 / w);
        }
        return v;
    }

    // Taylor coefficients of f(x + e*dir) in e up to order kMaxDerivOrder.
    Jet1<kMaxDerivOrder> jet_along(Vec2 x, Vec2 dir) const {
        Jet1<kMaxDerivOrder> total;
        for (const auto& at : atoms_) {
            const Vec2 d = x - at.center;
            const double ir2 = 1.0 / (at.rho * at.rho);
            Jet1<kMaxDerivOrder> u;
            u.a[0] = d.norm2() * ir2;
            u.a[1] = 2.0 * d.dot(dir) * ir2;
            u.a[2] = dir.norm2() * ir2;
            const double w0 = 1.0 - u.a[0];
            if (w0 <= detail::kWFloor) continue;
            Jet1<kMaxDerivOrder> w = -u;
            w.a[0] = w0;
            total += exp(-recip(w)) * at.amp;
        }
        return total;
    }

    // Full bivariate jet at x up to total degree kMaxDerivOrder.
    Jet2<kMaxDerivOrder> jet2(Vec2 x) const {
        Jet2<kMaxDerivOrder> total;
        for (const auto& at : atoms_) {
            const Vec2 d = x - at.center;
            const double ir2 = 1.0 / (at.rho * at.rho);
            Jet2<kMaxDerivOrder> u;
            u.c[0][0] = d.norm2() * ir2;
            u.c[1][0] = 2.0 * d.x * ir2;
            u.c[0][1] = 2.0 * d.y * ir2;
            u.c[2][0] = ir2;
            u.c[0][2] = ir2;
            const double w0 = 1.0 - u.c[0][0];
            if (w0 <= detail::kWFloor) continue;
            Jet2<kMaxDerivOrder> w = u * -1.0;
            w.c[0][0] = w0;
            Jet2<kMaxDerivOrder> f = exp(recip(w) * -1.0);
            total += f * at.amp;
        }
        return total;
    }

    // s-intervals on which the Radon data R(s, omega, .) can be nonzero.
    std::vector<Interval> radon_s_intervals(Vec2 omega) const {
        std::vector<Interval> iv;
        iv.reserve(atoms_.size());
        for (const auto& at : atoms_) {
            const double sc = at.center.dot(omega);
            iv.emplace_back(sc - at.rho, sc + at.rho);
        }
        return detail::merge_intervals(std::move(iv));
    }

    // p-intervals (chords) of the line {s*omega + p*omega_perp} meeting atoms.
    std::vector<Interval> line_p_intervals(double s, Vec2 omega) const {
        std::vector<Interval> iv;
        const Vec2 perp = omega.perp();
        for (const auto& at : atoms_) {
            const double ds = s - at.center.dot(omega);
            const double h2 = at.rho * at.rho - ds * ds;
            if (h2 <= 0.0) continue;
            const double half = std::sqrt(h2);
            const double pc = at.center.dot(perp);
            iv.emplace_back(pc - half, pc + half);
        }
        return detail::merge_intervals(std::move(iv));
    }

  private:
    std::vector<BumpAtom> atoms_;
    double support_radius_ = 1.0;
};

// Exact partial derivative d^(ax+ay) f / dx^ax dy^ay at x; |alpha| <= 4.
inline double eval_deriv(const SmoothField& f, Vec2 x, int ax, int ay) {
    if (ax < 0 || ay < 0 || ax + ay > kMaxDerivOrder)
        throw std::invalid_argument("eval_deriv: multi-index order must be <= 4");
    return f.jet2(x).deriv(ax, ay);
}

struct DataConfig {
    double support_radius = 1.0;
    std::vector<BumpAtom> u0_atoms;  // initial displacement profile
    std::vector<BumpAtom> u1_atoms;  // initial velocity profile
};

// Builds (u1^0, u1^1). Atoms must sit strictly inside the support ball; a
// field with no atoms is the zero field, but an entirely empty config is
// rejected.
inline std::pair<SmoothField, SmoothField> make_data(const DataConfig& cfg) {
    if (cfg.support_radius <= 0.0)
        throw std::invalid_argument("make_data: support_radius must be positive");
    if (cfg.u0_atoms.empty() && cfg.u1_atoms.empty())
        throw std::invalid_argument("make_data: config contains no bump atoms");
    auto check = [&](const std::vector<BumpAtom>& atoms) {
        for (const auto& at : atoms) {
            if (at.rho <= 0.0) throw std::invalid_argument("make_data: bump rho must be positive");
            if (at.center.norm() + at.rho > cfg.support_radius + 1e-12)
                throw std::invalid_argument(
                    "make_data: bump escapes the support ball of radius M");
        }
    };
    check(cfg.u0_atoms);
    check(cfg.u1_atoms);
    return {SmoothField(cfg.u0_atoms, cfg.support_radius),
            SmoothField(cfg.u1_atoms, cfg.support_radius)};
}

}  // namespace cusplab
