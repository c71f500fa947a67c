#ifndef AUTORES_FITUTIL_HPP
#define AUTORES_FITUTIL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace autores::fitutil {

inline double wrap_2pi(double x) {
    const double tau = 2.0 * std::numbers::pi;
    double r = std::fmod(x, tau);
    if (r < 0.0) r += tau;
    return r;
}

/// Signed distance from a to b on the circle, in (-pi, pi].
inline double angle_diff(double a, double b) {
    const double tau = 2.0 * std::numbers::pi;
    double d = std::fmod(a - b, tau);
    if (d <= -std::numbers::pi) d += tau;
    if (d > std::numbers::pi) d -= tau;
    return d;
}

inline double angle_dist(double a, double b) { return std::abs(angle_diff(a, b)); }

/// In-place Gaussian elimination with partial pivoting; returns false if singular.
template <std::size_t K>
bool solve(std::array<std::array<double, K>, K>& a, std::array<double, K>& b) {
    for (std::size_t col = 0; col < K; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < K; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < K; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < K; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t col = K; col-- > 0;) {
        for (std::size_t c = col + 1; c < K; ++c) b[col] -= a[col][c] * b[c];
        b[col] /= a[col][col];
        if (!std::isfinite(b[col])) return false;
    }
    return true;
}

/// Ordinary least squares y ~ a + b x; returns {a, b}.
inline std::array<double, 2> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    return {(sy * sxx - sx * sxy) / det, (n * sxy - sx * sy) / det};
}

/// Circular mean of angles.
inline double circular_mean(const std::vector<double>& ang) {
    double c = 0, s = 0;
    for (double a : ang) {
        c += std::cos(a);
        s += std::sin(a);
    }
    return std::atan2(s, c);
}

} // namespace autores::fitutil

#endif
