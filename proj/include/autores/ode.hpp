#ifndef AUTORES_ODE_HPP
#define AUTORES_ODE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "autores/errors.hpp"

namespace autores::ode {

struct Tolerances {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 1.0;
    double min_step = 1e-13;

    void validate() const;
};

/// Dense record of one adaptive integration: every accepted step is a sample.
struct Trajectory {
    std::string equation_id;
    std::string independent_var;
    std::size_t dim = 0;
    std::vector<double> points;  // strictly monotone (either direction)
    std::vector<double> states;  // dim * points.size(), sample-major
    Tolerances tol;

    std::size_t size() const { return points.size(); }
    std::span<const double> state(std::size_t i) const {
        return {states.data() + i * dim, dim};
    }
    double front_point() const { return points.front(); }
    double back_point() const { return points.back(); }

    void push(double t, std::span<const double> y) {
        points.push_back(t);
        states.insert(states.end(), y.begin(), y.end());
    }

    /// Largest i with points[i] <= t <= points[i+1] (or the reverse ordering).
    std::size_t locate(double t) const;

    /// Cubic Hermite value needs derivatives; samples are dense enough that
    /// linear interpolation serves the few callers that need off-sample values.
    std::vector<double> interpolate(double t) const;
};

namespace detail {

template <std::size_t N>
bool all_finite(const std::array<double, N>& y) {
    for (double v : y)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace detail

/// Embedded Dormand-Prince 5(4) with PI step-size control.
/// rhs(t, y, dydt); integrates from t0 to t1 in either direction.
/// Throws StepUnderflow when the controller demands a step below
/// tol.min_step and NonFiniteState when the state blows up.
template <std::size_t N, class Rhs>
Trajectory integrate_adaptive(Rhs&& rhs, std::array<double, N> y, double t0, double t1,
                              const Tolerances& tol, std::string equation_id = "",
                              std::string var_name = "t") {
    tol.validate();
    if (t0 == t1) throw ValidationError("integrate_adaptive: empty span");
    if (!detail::all_finite(y)) throw ValidationError("integrate_adaptive: non-finite initial state");

    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = (t1 > t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    const double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    const double fac_min = 0.2, fac_max = 10.0;

    Trajectory traj;
    traj.equation_id = std::move(equation_id);
    traj.independent_var = std::move(var_name);
    traj.dim = N;
    traj.tol = tol;

    std::array<double, N> k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, yt{}, ynew{};
    double t = t0;
    traj.push(t, y);
    rhs(t, y, k1);
    if (!detail::all_finite(k1)) throw NonFiniteState("integrate_adaptive: rhs non-finite at t0");

    // Initial step: Hairer's two-stage estimate.
    double h;
    {
        double dny = 0.0, dnf = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = tol.abs_tol + tol.rel_tol * std::abs(y[i]);
            dny += (y[i] / sc) * (y[i] / sc);
            dnf += (k1[i] / sc) * (k1[i] / sc);
        }
        double h0 = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
        h0 = std::min({h0, span, tol.max_step});
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + dir * h0 * k1[i];
        rhs(t + dir * h0, yt, k2);
        double der2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = tol.abs_tol + tol.rel_tol * std::abs(y[i]);
            const double d = (k2[i] - k1[i]) / sc;
            der2 += d * d;
        }
        der2 = std::sqrt(der2) / h0;
        const double der12 = std::max(std::sqrt(dnf), der2);
        const double h1 = (der12 <= 1e-15) ? std::max(1e-6, h0 * 1e-3)
                                           : std::pow(0.01 / der12, 0.2);
        h = std::min({100.0 * h0, h1, span, tol.max_step});
    }

    double fac_old = 1e-4;
    bool rejected = false;
    const std::size_t max_steps = 100'000'000;

    for (std::size_t step = 0;; ++step) {
        if (step > max_steps) throw NumericError("integrate_adaptive: step budget exhausted");
        const double remaining = std::abs(t1 - t);
        if (remaining <= 0.0) break;
        bool last = false;
        if (h >= remaining) {
            h = remaining;
            last = true;
        }
        if (!last && h < tol.min_step)
            throw StepUnderflow("integrate_adaptive: step underflow at " + traj.independent_var +
                                " = " + std::to_string(t));
        const double hd = dir * h;

        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + hd * a21 * k1[i];
        rhs(t + c2 * hd, yt, k2);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + hd * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * hd, yt, k3);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + hd * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * hd, yt, k4);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + hd * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * hd, yt, k5);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + hd * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + hd, yt, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + hd * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + hd, ynew, k7);

        if (!detail::all_finite(ynew) || !detail::all_finite(k7)) {
            if (h * 0.1 < tol.min_step)
                throw NonFiniteState("integrate_adaptive: blow-up near " + traj.independent_var +
                                     " = " + std::to_string(t));
            h *= 0.1;
            rejected = true;
            continue;
        }

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = tol.abs_tol + tol.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double e = hd * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]) / sc;
            err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(N));

        const double fac11 = std::pow(std::max(err, 1e-32), expo1);
        if (err <= 1.0) {
            fac_old = std::max(err, 1e-4);
            t = last ? t1 : t + hd;
            y = ynew;
            k1 = k7;
            traj.push(t, y);
            double fac = fac11 / std::pow(fac_old, beta);
            fac = std::max(1.0 / fac_max, std::min(1.0 / fac_min, fac / safe));
            double hnew = h / fac;
            if (rejected) hnew = std::min(hnew, h);
            h = std::min(hnew, tol.max_step);
            rejected = false;
        } else {
            h = h / std::min(1.0 / fac_min, fac11 / safe);
            rejected = true;
            if (h < tol.min_step)
                throw StepUnderflow("integrate_adaptive: step underflow at " +
                                    traj.independent_var + " = " + std::to_string(t));
        }
    }
    return traj;
}

} // namespace autores::ode

#endif
