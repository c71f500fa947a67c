#include "autores/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "autores/fitutil.hpp"

namespace autores::painleve {

namespace {

constexpr double kDecayFraction = 0.05;       // of the capture magnitude sqrt(z1/2)
constexpr double kFitConvergence = 1e-9;
constexpr int kFitMaxIterations = 50;

struct WindowSamples {
    std::vector<double> z;
    std::vector<double> v;
};

WindowSamples collect(const ode::Trajectory& traj, double z1, double z2) {
    WindowSamples w;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double z = traj.points[i];
        if (z >= z1 && z <= z2) {
            w.z.push_back(z);
            w.v.push_back(traj.state(i)[0]);
        }
    }
    return w;
}

} // namespace

SeedState seed_at_minus_infinity(const Seed& seed) {
    if (!(seed.z0 <= -10.0))
        throw ValidationError("seed_at_minus_infinity: z0 must be <= -10");
    const double a = seed.alpha_t;
    const double m = -seed.z0;
    const double theta = 2.0 / 3.0 * std::pow(m, 1.5) + 0.75 * a * a * std::log(m) + seed.phi_t;
    const double v = a * std::pow(m, -0.25) * std::sin(theta);
    // d/dz = -d/dm of the closed form.
    const double dtheta_dm = std::sqrt(m) + 0.75 * a * a / m;
    const double dv_dm = a * (-0.25 * std::pow(m, -1.25) * std::sin(theta) +
                              std::pow(m, -0.25) * std::cos(theta) * dtheta_dm);
    return {v, -dv_dm};
}

ode::Trajectory integrate_from(double z0, double v, double dv, double z_end,
                               const ode::Tolerances& tol) {
    auto rhs = [](double z, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        dy[0] = y[1];
        dy[1] = z * y[0] - 2.0 * y[0] * y[0] * y[0];
    };
    return ode::integrate_adaptive<2>(rhs, {v, dv}, z0, z_end, tol, "painleve2", "z");
}

ode::Trajectory integrate(const Seed& seed, double z_end, const ode::Tolerances& tol) {
    if (!(z_end > seed.z0)) throw ValidationError("integrate: z_end must exceed z0");
    const SeedState s = seed_at_minus_infinity(seed);
    return integrate_from(seed.z0, s.v, s.dv, z_end, tol);
}

PlusClassification classify_at_plus_infinity(const ode::Trajectory& traj, double z1, double z2) {
    if (!(z1 >= 10.0)) throw ValidationError("classify_at_plus_infinity: z1 must be >= 10");
    if (!(z2 > z1)) throw ValidationError("classify_at_plus_infinity: empty window");
    WindowSamples w = collect(traj, z1, z2);
    if (w.z.size() < 16) throw WindowTooShort("classify_at_plus_infinity: too few samples in window");

    double vmax = 0.0;
    for (double v : w.v) vmax = std::max(vmax, std::abs(v));
    if (vmax < kDecayFraction * std::sqrt(z1 / 2.0)) {
        PlusClassification out;
        out.kind = PlusKind::Decay;
        return out;
    }

    // Capture branch. The fit needs at least 8 oscillation periods.
    const double phase_span =
        2.0 * std::sqrt(2.0) / 3.0 * (std::pow(z2, 1.5) - std::pow(z1, 1.5));
    if (phase_span < 16.0 * std::numbers::pi)
        throw WindowTooShort("classify_at_plus_infinity: capture fit needs >= 8 periods");

    double mean_rel = 0.0;
    for (std::size_t i = 0; i < w.z.size(); ++i) mean_rel += w.v[i] / std::sqrt(w.z[i] / 2.0);
    const int sign = mean_rel >= 0.0 ? 1 : -1;

    const std::size_t n = w.z.size();
    std::vector<double> g(n);  // s*v - sqrt(z/2), the oscillating remainder
    for (std::size_t i = 0; i < n; ++i) g[i] = sign * w.v[i] - std::sqrt(w.z[i] / 2.0);

    // Envelope initialisation for rho (mean |cos| = 2/pi).
    double rho = 0.0;
    for (std::size_t i = 0; i < n; ++i) rho += std::abs(g[i]) * std::pow(2.0 * w.z[i], 0.25);
    rho *= std::numbers::pi / 2.0 / static_cast<double>(n);

    // Iterated harmonic regression: rho feeds the ln z phase drift, so a plain
    // linear pass is not enough. Basis includes a 1/z column for the slow
    // mean shift the nonlinearity induces.
    double upsilon = 0.0;
    double rms = 0.0;
    for (int it = 0;; ++it) {
        if (it >= kFitMaxIterations)
            throw FitDiverged("classify_at_plus_infinity: fit did not converge");
        std::array<std::array<double, 3>, 3> ata{};
        std::array<double, 3> atb{};
        for (std::size_t i = 0; i < n; ++i) {
            const double z = w.z[i];
            const double ph = 2.0 * std::sqrt(2.0) / 3.0 * std::pow(z, 1.5) -
                              1.5 * rho * rho * std::log(z);
            const double amp = std::pow(2.0 * z, -0.25);
            const std::array<double, 3> row = {amp * std::cos(ph), amp * std::sin(ph), 1.0 / z};
            for (std::size_t r = 0; r < 3; ++r) {
                for (std::size_t c = 0; c < 3; ++c) ata[r][c] += row[r] * row[c];
                atb[r] += row[r] * g[i];
            }
        }
        if (!fitutil::solve(ata, atb))
            throw FitDiverged("classify_at_plus_infinity: singular normal equations");
        const double rho_new = std::hypot(atb[0], atb[1]);
        upsilon = std::atan2(-atb[1], atb[0]);
        const double change = std::abs(rho_new - rho);
        rho = rho_new;
        if (change < kFitConvergence) {
            double ss = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double z = w.z[i];
                const double ph = 2.0 * std::sqrt(2.0) / 3.0 * std::pow(z, 1.5) -
                                  1.5 * rho * rho * std::log(z) + upsilon;
                const double model = std::pow(2.0 * z, -0.25) * rho * std::cos(ph) + atb[2] / z;
                ss += (g[i] - model) * (g[i] - model);
            }
            rms = std::sqrt(ss / static_cast<double>(n));
            break;
        }
    }

    PlusClassification out;
    out.kind = PlusKind::Capture;
    out.sign = sign;
    out.rho = rho;
    out.upsilon = fitutil::wrap_2pi(upsilon);
    out.rms_residual = rms;
    return out;
}

MinusFit fit_minus_infinity(const ode::Trajectory& traj, double z1, double z2) {
    if (!(z2 <= -10.0)) throw ValidationError("fit_minus_infinity: window must end at z <= -10");
    if (!(z2 > z1)) throw ValidationError("fit_minus_infinity: empty window");
    WindowSamples w = collect(traj, z1, z2);
    if (w.z.size() < 16) throw WindowTooShort("fit_minus_infinity: too few samples in window");
    const double phase_span = 2.0 / 3.0 * (std::pow(-z1, 1.5) - std::pow(-z2, 1.5));
    if (phase_span < 16.0 * std::numbers::pi)
        throw WindowTooShort("fit_minus_infinity: needs >= 8 periods");

    const std::size_t n = w.z.size();
    std::vector<double> g(n);  // v (-z)^(1/4)
    for (std::size_t i = 0; i < n; ++i) g[i] = w.v[i] * std::pow(-w.z[i], 0.25);

    double alpha = 0.0;
    for (double gi : g) alpha += std::abs(gi);
    alpha *= std::numbers::pi / 2.0 / static_cast<double>(n);

    MinusFit out;
    if (alpha < 1e-9) {
        out.alpha_t = 0.0;
        out.phi_t = 0.0;
        out.identifiable = false;
        return out;
    }

    double phi = 0.0;
    for (int it = 0;; ++it) {
        if (it >= kFitMaxIterations) throw FitDiverged("fit_minus_infinity: fit did not converge");
        std::array<std::array<double, 2>, 2> ata{};
        std::array<double, 2> atb{};
        for (std::size_t i = 0; i < n; ++i) {
            const double m = -w.z[i];
            const double ph = 2.0 / 3.0 * std::pow(m, 1.5) + 0.75 * alpha * alpha * std::log(m);
            const std::array<double, 2> row = {std::sin(ph), std::cos(ph)};
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) ata[r][c] += row[r] * row[c];
                atb[r] += row[r] * g[i];
            }
        }
        if (!fitutil::solve(ata, atb))
            throw FitDiverged("fit_minus_infinity: singular normal equations");
        const double alpha_new = std::hypot(atb[0], atb[1]);
        phi = std::atan2(atb[1], atb[0]);
        const double change = std::abs(alpha_new - alpha);
        alpha = alpha_new;
        if (change < kFitConvergence) {
            double ss = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double m = -w.z[i];
                const double ph =
                    2.0 / 3.0 * std::pow(m, 1.5) + 0.75 * alpha * alpha * std::log(m) + phi;
                const double model = alpha * std::pow(m, -0.25) * std::sin(ph);
                ss += (w.v[i] - model) * (w.v[i] - model);
            }
            out.rms_residual = std::sqrt(ss / static_cast<double>(n));
            break;
        }
    }
    out.alpha_t = alpha;
    out.phi_t = fitutil::wrap_2pi(phi);
    return out;
}

} // namespace autores::painleve
