#include "autores/wkb_post.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "autores/fitutil.hpp"

namespace autores::wkb_post {

namespace {

constexpr int kFitMaxIterations = 50;
constexpr double kFitConvergence = 1e-12;

double branch_sign(int j) { return j % 2 == 0 ? 1.0 : -1.0; }  // (-1)^j

} // namespace

model::Phi slow_manifold(double theta, int family) {
    switch (family) {
        case 1:
            return {0.0, 0.0};
        case 2:
        case 3:
            if (!(theta > -1.0)) throw OutOfDomain("slow_manifold: j=2,3 requires theta > -1");
            return {(family == 2 ? 1.0 : -1.0) * std::sqrt(1.0 + theta), 0.0};
        case 4:
        case 5:
            if (!(theta > 1.0)) throw OutOfDomain("slow_manifold: j=4,5 requires theta > 1");
            return {0.0, (family == 4 ? 1.0 : -1.0) * std::sqrt(theta - 1.0)};
        default:
            throw ValidationError("slow_manifold: family must be 1..5");
    }
}

double omega_post(double theta) {
    if (!(theta > -1.0)) throw OutOfDomain("omega_post: requires theta > -1");
    return 4.0 / 3.0 * std::pow(theta + 1.0, 1.5);
}

double slow_phase_correction(double theta) {
    if (!(theta > -1.0)) throw OutOfDomain("slow_phase_correction: requires theta > -1");
    const double root = std::sqrt(1.0 + theta);
    return 2.5 * theta + 0.75 * theta * theta + (112.0 - 8.0 * theta) * root / 6.0 +
           1.5 * std::log(1.0 + theta);
}

model::Phi eval(double theta, double eps, const PostCaptureParams& p, EquilibriumVariant ev) {
    if (!(theta > -1.0)) throw OutOfDomain("wkb_post::eval: requires theta > -1");
    const double root = std::sqrt(1.0 + theta);
    const double equil = (ev == EquilibriumVariant::FullRoot ? 1.0 : 0.5) * root;
    const double s = omega_post(theta) / eps + p.phi00 + p.A00 * p.A00 * slow_phase_correction(theta);
    const double q = std::pow(1.0 + theta, 0.25);
    const model::Phi osc(std::sqrt(eps) * p.A00 * std::cos(s) / q,
                         std::sqrt(eps) * p.A00 * std::sin(s) * q);
    return branch_sign(p.branch_j) * (equil + osc);
}

Validity validity_margins(double theta, double eps) {
    return {std::pow(eps, -2.0 / 3.0) * (1.0 + theta), std::pow(eps, 0.8) * theta};
}

PostFit fit_post_capture(const ode::Trajectory& traj, double eps, double theta1, double theta2,
                         EquilibriumVariant ev) {
    if (!(theta2 > theta1)) throw ValidationError("fit_post_capture: empty window");
    std::vector<double> th;
    std::vector<model::Phi> phi;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.points[i];
        if (t >= theta1 && t <= theta2) {
            th.push_back(t);
            phi.emplace_back(traj.state(i)[0], traj.state(i)[1]);
        }
    }
    if (th.size() < 32) throw WindowTooShort("fit_post_capture: too few samples in window");
    const double phase_span = (omega_post(theta2) - omega_post(theta1)) / eps;
    if (phase_span < 16.0 * std::numbers::pi)
        throw WindowTooShort("fit_post_capture: needs >= 8 fast periods");

    // The window must track the slow manifold.
    std::size_t on_manifold = 0;
    double mean_re = 0.0;
    for (std::size_t i = 0; i < th.size(); ++i) {
        mean_re += phi[i].real();
        if (std::norm(phi[i]) >= 0.5 * (1.0 + th[i])) ++on_manifold;
    }
    if (on_manifold < th.size() * 9 / 10)
        throw NotCaptured("fit_post_capture: window is not on a captured branch");
    const int j = mean_re >= 0.0 ? 2 : 3;
    const double sj = branch_sign(j);
    const double eq_factor = ev == EquilibriumVariant::FullRoot ? 1.0 : 0.5;

    const std::size_t n = th.size();
    // Normalised oscillation q = A00 exp(i S) + slow residue.
    std::vector<model::Phi> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double root = std::sqrt(1.0 + th[i]);
        const model::Phi r = sj * phi[i] - model::Phi(eq_factor * root, 0.0);
        const double pq = std::pow(1.0 + th[i], 0.25);
        q[i] = model::Phi(r.real() * pq, r.imag() / pq) / std::sqrt(eps);
    }

    double a00 = 0.0;
    for (const auto& v : q) a00 += std::abs(v);
    a00 /= static_cast<double>(n);

    std::vector<double> resid_phase(n);
    double phi00 = 0.0;
    {
        std::vector<double> ang(n);
        for (std::size_t i = 0; i < n; ++i)
            ang[i] = std::arg(q[i]) -
                     std::fmod(omega_post(th[i]) / eps + a00 * a00 * slow_phase_correction(th[i]),
                               2.0 * std::numbers::pi);
        phi00 = fitutil::circular_mean(ang);
    }

    // Gauss-Newton refinement of (A00, phi00) on the full leading-order model.
    for (int it = 0;; ++it) {
        if (it >= kFitMaxIterations) throw FitDiverged("fit_post_capture: fit did not converge");
        std::array<std::array<double, 2>, 2> jtj{};
        std::array<double, 2> jtr{};
        for (std::size_t i = 0; i < n; ++i) {
            const double c = slow_phase_correction(th[i]);
            const double s = omega_post(th[i]) / eps + phi00 + a00 * a00 * c;
            const double cs = std::cos(s), sn = std::sin(s);
            // q model = A00 (cos s, sin s); dS/dA00 = 2 A00 c.
            const double rr = q[i].real() - a00 * cs;
            const double ri = q[i].imag() - a00 * sn;
            const double dr_da = cs - a00 * sn * 2.0 * a00 * c;
            const double di_da = sn + a00 * cs * 2.0 * a00 * c;
            const double dr_dp = -a00 * sn;
            const double di_dp = a00 * cs;
            jtj[0][0] += dr_da * dr_da + di_da * di_da;
            jtj[0][1] += dr_da * dr_dp + di_da * di_dp;
            jtj[1][0] = jtj[0][1];
            jtj[1][1] += dr_dp * dr_dp + di_dp * di_dp;
            jtr[0] += dr_da * rr + di_da * ri;
            jtr[1] += dr_dp * rr + di_dp * ri;
        }
        if (!fitutil::solve(jtj, jtr)) throw FitDiverged("fit_post_capture: singular normal equations");
        a00 += jtr[0];
        phi00 += jtr[1];
        if (std::abs(jtr[0]) < kFitConvergence && std::abs(jtr[1]) < kFitConvergence) break;
    }

    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = omega_post(th[i]) / eps + phi00 + a00 * a00 * slow_phase_correction(th[i]);
        ss += std::norm(q[i] - model::Phi(a00 * std::cos(s), a00 * std::sin(s)));
        resid_phase[i] = fitutil::angle_diff(std::arg(q[i]), s);
    }

    PostFit out;
    out.params.A00 = std::abs(a00);
    out.params.phi00 = fitutil::wrap_2pi(phi00);
    out.params.branch_j = j;
    out.rms_residual = std::sqrt(ss / static_cast<double>(n));
    out.phase_drift = fitutil::linear_fit(th, resid_phase)[1];
    return out;
}

} // namespace autores::wkb_post
