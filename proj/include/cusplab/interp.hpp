// Bicubic Hermite interpolation on a uniform grid, optionally periodic in y.
// Node derivatives come from 4th-order finite differences, so values and
// first derivatives converge at O(h^4) for smooth data and the surface is C1.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cusplab {

class BicubicGrid {
  public:
    BicubicGrid() = default;
    BicubicGrid(std::vector<double> f, int nx, int ny, double x0, double dx, double y0,
                double dy, bool periodic_y)
        : f_(std::move(f)), nx_(nx), ny_(ny), x0_(x0), dx_(dx), y0_(y0), dy_(dy),
          per_y_(periodic_y) {
        if (nx_ < 5 || ny_ < 5) throw std::invalid_argument("BicubicGrid: need >= 5x5 nodes");
        if (f_.size() != static_cast<size_t>(nx_) * ny_)
            throw std::invalid_argument("BicubicGrid: array size mismatch");
        build_node_derivatives();
    }

    double x_lo() const { return x0_; }
    double x_hi() const { return x0_ + dx_ * (nx_ - 1); }
    double y_lo() const { return y0_; }
    double y_hi() const { return y0_ + dy_ * (per_y_ ? ny_ : ny_ - 1); }

    double value(double x, double y) const {
        double v;
        eval(x, y, &v, nullptr, nullptr);
        return v;
    }

    // grad = (d/dx, d/dy), hess = (xx, xy, yy); pass nullptr to skip.
    void eval(double x, double y, double* val, double* grad, double* hess) const {
        double u = (x - x0_) / dx_;
        int i = static_cast<int>(std::floor(u));
        if (i < 0) i = 0;
        if (i > nx_ - 2) i = nx_ - 2;
        double a = u - i;

        double v = (y - y0_) / dy_;
        int j;
        double b;
        int j1;
        if (per_y_) {
            v = std::fmod(v, static_cast<double>(ny_));
            if (v < 0) v += ny_;
            j = static_cast<int>(std::floor(v));
            if (j >= ny_) j = ny_ - 1;
            b = v - j;
            j1 = (j + 1) % ny_;
        } else {
            j = static_cast<int>(std::floor(v));
            if (j < 0) j = 0;
            if (j > ny_ - 2) j = ny_ - 2;
            b = v - j;
            j1 = j + 1;
        }

        // Basis H[t][p]: t = 0 value-type, t = 1 slope-type; p = near/far corner.
        double A[2][2], dA[2][2], ddA[2][2];
        hermite(a, A, dA, ddA);
        double B[2][2], dB[2][2], ddB[2][2];
        hermite(b, B, dB, ddB);

        const int cols[2] = {j, j1};
        double s = 0, sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        for (int p = 0; p < 2; ++p) {
            const int row = i + p;
            for (int q = 0; q < 2; ++q) {
                const size_t n = static_cast<size_t>(row) * ny_ + cols[q];
                const double cf = f_[n], cx = gx_[n], cy = gy_[n], cxy = gxy_[n];
                s += A[0][p] * B[0][q] * cf + A[1][p] * B[0][q] * cx + A[0][p] * B[1][q] * cy +
                     A[1][p] * B[1][q] * cxy;
                if (grad || hess) {
                    sx += dA[0][p] * B[0][q] * cf + dA[1][p] * B[0][q] * cx +
                          dA[0][p] * B[1][q] * cy + dA[1][p] * B[1][q] * cxy;
                    sy += A[0][p] * dB[0][q] * cf + A[1][p] * dB[0][q] * cx +
                          A[0][p] * dB[1][q] * cy + A[1][p] * dB[1][q] * cxy;
                }
                if (hess) {
                    sxx += ddA[0][p] * B[0][q] * cf + ddA[1][p] * B[0][q] * cx +
                           ddA[0][p] * B[1][q] * cy + ddA[1][p] * B[1][q] * cxy;
                    sxy += dA[0][p] * dB[0][q] * cf + dA[1][p] * dB[0][q] * cx +
                           dA[0][p] * dB[1][q] * cy + dA[1][p] * dB[1][q] * cxy;
                    syy += A[0][p] * ddB[0][q] * cf + A[1][p] * ddB[0][q] * cx +
                           A[0][p] * ddB[1][q] * cy + A[1][p] * ddB[1][q] * cxy;
                }
            }
        }
        if (val) *val = s;
        if (grad) {
            grad[0] = sx / dx_;
            grad[1] = sy / dy_;
        }
        if (hess) {
            hess[0] = sxx / (dx_ * dx_);
            hess[1] = sxy / (dx_ * dy_);
            hess[2] = syy / (dy_ * dy_);
        }
    }

  private:
    static void hermite(double t, double A[2][2], double dA[2][2], double ddA[2][2]) {
        const double t2 = t * t, t3 = t2 * t;
        A[0][0] = 1 + t2 * (2 * t - 3);
        A[0][1] = t2 * (3 - 2 * t);
        A[1][0] = t3 - 2 * t2 + t;
        A[1][1] = t3 - t2;
        dA[0][0] = 6 * t2 - 6 * t;
        dA[0][1] = 6 * t - 6 * t2;
        dA[1][0] = 3 * t2 - 4 * t + 1;
        dA[1][1] = 3 * t2 - 2 * t;
        ddA[0][0] = 12 * t - 6;
        ddA[0][1] = 6 - 12 * t;
        ddA[1][0] = 6 * t - 4;
        ddA[1][1] = 6 * t - 2;
    }

    int wrap_y(int j) const {
        if (per_y_) {
            j %= ny_;
            if (j < 0) j += ny_;
            return j;
        }
        if (j < 0) return 0;
        if (j >= ny_) return ny_ - 1;
        return j;
    }

    // 4th-order node slopes in grid units; one-sided stencils on clamped edges.
    double stencil_x(const std::vector<double>& g, int i, int j) const {
        auto at = [&](int ii) { return g[static_cast<size_t>(ii) * ny_ + j]; };
        if (i >= 2 && i <= nx_ - 3)
            return (8 * (at(i + 1) - at(i - 1)) - (at(i + 2) - at(i - 2))) / 12.0;
        if (i == 0) return (-25 * at(0) + 48 * at(1) - 36 * at(2) + 16 * at(3) - 3 * at(4)) / 12.0;
        if (i == 1) return (-3 * at(0) - 10 * at(1) + 18 * at(2) - 6 * at(3) + at(4)) / 12.0;
        if (i == nx_ - 2)
            return (3 * at(nx_ - 1) + 10 * at(nx_ - 2) - 18 * at(nx_ - 3) + 6 * at(nx_ - 4) -
                    at(nx_ - 5)) /
                   12.0;
        return (25 * at(nx_ - 1) - 48 * at(nx_ - 2) + 36 * at(nx_ - 3) - 16 * at(nx_ - 4) +
                3 * at(nx_ - 5)) /
               12.0;
    }

    double stencil_y(const std::vector<double>& g, int i, int j) const {
        auto at = [&](int jj) { return g[static_cast<size_t>(i) * ny_ + wrap_y(jj)]; };
        if (per_y_ || (j >= 2 && j <= ny_ - 3))
            return (8 * (at(j + 1) - at(j - 1)) - (at(j + 2) - at(j - 2))) / 12.0;
        if (j == 0) return (-25 * at(0) + 48 * at(1) - 36 * at(2) + 16 * at(3) - 3 * at(4)) / 12.0;
        if (j == 1) return (-3 * at(0) - 10 * at(1) + 18 * at(2) - 6 * at(3) + at(4)) / 12.0;
        if (j == ny_ - 2)
            return (3 * at(ny_ - 1) + 10 * at(ny_ - 2) - 18 * at(ny_ - 3) + 6 * at(ny_ - 4) -
                    at(ny_ - 5)) /
                   12.0;
        return (25 * at(ny_ - 1) - 48 * at(ny_ - 2) + 36 * at(ny_ - 3) - 16 * at(ny_ - 4) +
                3 * at(ny_ - 5)) /
               12.0;
    }

    void build_node_derivatives() {
        const size_t n = f_.size();
        gx_.resize(n);
        gy_.resize(n);
        gxy_.resize(n);
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j) gx_[static_cast<size_t>(i) * ny_ + j] = stencil_x(f_, i, j);
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j) gy_[static_cast<size_t>(i) * ny_ + j] = stencil_y(f_, i, j);
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j)
                gxy_[static_cast<size_t>(i) * ny_ + j] = stencil_y(gx_, i, j);
    }

    std::vector<double> f_, gx_, gy_, gxy_;
    int nx_ = 0, ny_ = 0;
    double x0_ = 0, dx_ = 1, y0_ = 0, dy_ = 1;
    bool per_y_ = false;
};

}  // namespace cusplab
