#include "autores/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

#include <json.hpp>

#include "autores/csv.hpp"
#include "autores/fitutil.hpp"
#include "autores/svg.hpp"

namespace autores::harness {

namespace {

constexpr double kCaptureWindow = 0.5;
constexpr double kValidityFloor = 10.0;

using json = nlohmann::ordered_json;

} // namespace

ode::Trajectory integrate_primary(const RunConfig& cfg) {
    if (!(cfg.theta0 < cfg.theta1)) throw ValidationError("run: theta0 must be below theta1");
    if (!(cfg.eps > 0.0)) throw ValidationError("run: eps must be positive");
    model::Phi phi0;
    if (cfg.initial_params) {
        if (wkb_pre::validity_margin(cfg.theta0, cfg.eps) < kValidityFloor)
            throw ValidationError("run: theta0 outside the pre-capture validity domain");
        phi0 = wkb_pre::eval(cfg.theta0, cfg.eps, *cfg.initial_params, cfg.pre_variant);
    } else if (cfg.initial_phi) {
        phi0 = *cfg.initial_phi;
    } else {
        throw ValidationError("run: need initial phi or pre-capture parameters");
    }
    const double eps = cfg.eps;
    auto rhs = [eps](double theta, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        const model::Phi d = model::primary_rhs(theta, {y[0], y[1]}, eps);
        dy[0] = d.real();
        dy[1] = d.imag();
    };
    return ode::integrate_adaptive<2>(rhs, {phi0.real(), phi0.imag()}, cfg.theta0, cfg.theta1,
                                      cfg.tol, "primary", "theta");
}

std::optional<double> detect_capture(const ode::Trajectory& traj, double factor) {
    if (traj.back_point() <= -0.5)
        throw SpanTooShort("detect_capture: trajectory must span past theta = -0.5");
    const double theta_end = traj.back_point();
    if (theta_end < 0.0) return std::nullopt;

    auto holds = [&](std::size_t i) {
        const auto s = traj.state(i);
        return s[0] * s[0] + s[1] * s[1] >= factor * (1.0 + traj.points[i]);
    };

    // The criterion must hold on the whole trailing window.
    std::size_t last_fail = traj.size();  // sentinel: none
    for (std::size_t i = traj.size(); i-- > 0;) {
        if (!holds(i)) {
            if (traj.points[i] >= theta_end - kCaptureWindow) return std::nullopt;
            last_fail = i;
            break;
        }
    }
    if (last_fail == traj.size()) return traj.front_point();
    return traj.points[last_fail + 1];
}

ScatteringReport run_scattering(const RunConfig& cfg) {
    return run_scattering(cfg, integrate_primary(cfg));
}

ScatteringReport run_scattering(const RunConfig& cfg, const ode::Trajectory& traj) {
    ScatteringReport rep;
    rep.eps = cfg.eps;
    rep.pre = cfg.initial_params;

    if (cfg.initial_params) {
        rep.predicted = connection::capture_params(*cfg.initial_params, cfg.const_variant);
        rep.variant_resolution["pre"] =
            cfg.pre_variant == wkb_pre::PhaseVariant::TheoremForm ? "TheoremForm" : "SectionForm";
    }

    rep.theta_capture = detect_capture(traj);
    if (!rep.theta_capture) return rep;

    double w0 = 0.5, w1 = 1.5;
    if (cfg.fit_window) {
        w0 = cfg.fit_window->first;
        w1 = cfg.fit_window->second;
    }
    w1 = std::min(w1, traj.back_point());
    if (!(w0 < w1)) return rep;

    const wkb_post::PostFit fit = wkb_post::fit_post_capture(traj, cfg.eps, w0, w1, cfg.eq_variant);
    rep.measured = fit.params;
    rep.residuals["fit_rms"] = fit.rms_residual;
    rep.residuals["phase_drift"] = fit.phase_drift;

    // Slope of |phi|^2 against (1+theta) over the window; ~1 for the full-root
    // equilibrium reading, ~1/4 for the half-root one.
    {
        std::vector<double> x, y;
        for (std::size_t i = 0; i < traj.size(); ++i) {
            const double th = traj.points[i];
            if (th < w0 || th > w1) continue;
            const auto s = traj.state(i);
            x.push_back(1.0 + th);
            y.push_back(s[0] * s[0] + s[1] * s[1]);
        }
        const double slope = fitutil::linear_fit(x, y)[1];
        rep.residuals["abs2_slope"] = slope;
        rep.variant_resolution["equilibrium"] =
            std::abs(slope - 1.0) < std::abs(slope - 0.25) ? "FullRoot" : "HalfRoot";
    }

    if (rep.predicted && !rep.predicted->special) {
        rep.residuals["A00_rel_error"] =
            std::abs(fit.params.A00 - rep.predicted->A00) / rep.predicted->A00;
        rep.residuals["phi00_angle_error"] =
            fitutil::angle_dist(fit.params.phi00, rep.predicted->phi00);
        rep.residuals["branch_match"] =
            fit.params.branch_j == rep.predicted->branch_j ? 1.0 : 0.0;
        // Which constant variant explains the measured phase better.
        const auto other = cfg.const_variant == connection::ConstantVariant::TheoremTwoForm
                               ? connection::ConstantVariant::TheoremOneForm
                               : connection::ConstantVariant::TheoremTwoForm;
        const auto alt = connection::capture_params(*cfg.initial_params, other);
        const double err_alt = fitutil::angle_dist(fit.params.phi00, alt.phi00);
        const bool cfg_wins = rep.residuals["phi00_angle_error"] <= err_alt;
        const auto winner = cfg_wins ? cfg.const_variant : other;
        rep.variant_resolution["constant"] =
            winner == connection::ConstantVariant::TheoremTwoForm ? "TheoremTwoForm"
                                                                  : "TheoremOneForm";
    }
    return rep;
}

std::string report_to_json(const ScatteringReport& rep) {
    json j;
    j["eps"] = rep.eps;
    j["alpha10"] = rep.pre ? json(rep.pre->alpha10) : json();
    j["phi10"] = rep.pre ? json(rep.pre->phi10) : json();
    if (rep.predicted) {
        j["p_re"] = rep.predicted->p.real();
        j["p_im"] = rep.predicted->p.imag();
        j["special"] = rep.predicted->special;
        if (!rep.predicted->special) {
            j["rho2"] = rep.predicted->rho2;
            j["upsilon"] = rep.predicted->upsilon;
            j["A00_pred"] = rep.predicted->A00;
            j["phi00_pred"] = rep.predicted->phi00;
            j["j_pred"] = rep.predicted->branch_j;
        } else {
            j["rho2"] = nullptr;
            j["upsilon"] = nullptr;
            j["A00_pred"] = nullptr;
            j["phi00_pred"] = nullptr;
            j["j_pred"] = nullptr;
        }
    } else {
        for (const char* k : {"p_re", "p_im", "special", "rho2", "upsilon", "A00_pred",
                              "phi00_pred", "j_pred"})
            j[k] = nullptr;
    }
    j["theta_capture"] = rep.theta_capture ? json(*rep.theta_capture) : json();
    if (rep.measured) {
        j["A00_meas"] = rep.measured->A00;
        j["phi00_meas"] = rep.measured->phi00;
        j["j_meas"] = rep.measured->branch_j;
    } else {
        j["A00_meas"] = nullptr;
        j["phi00_meas"] = nullptr;
        j["j_meas"] = nullptr;
    }
    j["variant_resolution"] = rep.variant_resolution;
    j["residuals"] = rep.residuals;
    return j.dump(2) + "\n";
}

namespace {

RunConfig figure_config(double theta0) {
    RunConfig cfg;
    cfg.eps = 0.01;
    cfg.theta0 = theta0;
    cfg.theta1 = 1.0;
    cfg.initial_phi = model::Phi(0.02, 0.0);
    cfg.tol = ode::Tolerances{1e-9, 1e-9, 0.05, 1e-14};
    return cfg;
}

std::vector<double> column(const ode::Trajectory& t, int which) {
    // which: 0 theta, 1 re, 2 im, 3 abs2
    std::vector<double> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto s = t.state(i);
        out[i] = which == 0 ? t.points[i]
                            : (which == 1 ? s[0] : (which == 2 ? s[1] : s[0] * s[0] + s[1] * s[1]));
    }
    return out;
}

// One marching-squares pass over a regular grid of H values.
std::vector<std::array<double, 4>> contour_segments(const std::vector<double>& h, int n,
                                                    double lo, double hi, double level) {
    std::vector<std::array<double, 4>> segs;
    const double step = (hi - lo) / (n - 1);
    auto xval = [&](int i) { return lo + step * i; };
    auto cross = [&](double a, double b) { return (level - a) / (b - a); };
    for (int row = 0; row + 1 < n; ++row) {
        for (int col = 0; col + 1 < n; ++col) {
            const double v00 = h[row * n + col], v10 = h[row * n + col + 1];
            const double v01 = h[(row + 1) * n + col], v11 = h[(row + 1) * n + col + 1];
            int idx = (v00 > level ? 1 : 0) | (v10 > level ? 2 : 0) | (v11 > level ? 4 : 0) |
                      (v01 > level ? 8 : 0);
            if (idx == 0 || idx == 15) continue;
            const double x0 = xval(col), y0 = xval(row);
            // Edge crossing points: bottom, right, top, left.
            const std::array<double, 2> eb{x0 + step * cross(v00, v10), y0};
            const std::array<double, 2> er{x0 + step, y0 + step * cross(v10, v11)};
            const std::array<double, 2> et{x0 + step * cross(v01, v11), y0 + step};
            const std::array<double, 2> el{x0, y0 + step * cross(v00, v01)};
            auto emit = [&](const std::array<double, 2>& a, const std::array<double, 2>& b) {
                segs.push_back({a[0], a[1], b[0], b[1]});
            };
            switch (idx) {
                case 1: case 14: emit(el, eb); break;
                case 2: case 13: emit(eb, er); break;
                case 3: case 12: emit(el, er); break;
                case 4: case 11: emit(er, et); break;
                case 6: case 9:  emit(eb, et); break;
                case 7: case 8:  emit(el, et); break;
                case 5:  emit(el, eb); emit(er, et); break;
                case 10: emit(eb, er); emit(el, et); break;
                default: break;
            }
        }
    }
    return segs;
}

} // namespace

std::vector<std::string> write_portrait(double T, const std::string& csv_path,
                                        const std::string& svg_path) {
    constexpr int kGrid = 600;
    constexpr double kBox = 2.2;
    std::vector<double> h(static_cast<std::size_t>(kGrid) * kGrid);
    const double step = 2.0 * kBox / (kGrid - 1);
    for (int row = 0; row < kGrid; ++row)
        for (int col = 0; col < kGrid; ++col)
            h[static_cast<std::size_t>(row) * kGrid + col] =
                model::hamiltonian(T, {-kBox + step * col, -kBox + step * row});

    const auto eqs = model::equilibria(T);
    std::set<double> levels;
    double lo = 0.0, hi = 0.0;
    for (const auto& e : eqs) {
        const double he = model::hamiltonian(T, e.location);
        levels.insert(he);
        lo = std::min(lo, he);
        hi = std::max(hi, he);
    }
    for (int i = 0; i <= 12; ++i) levels.insert(lo - 1.5 + (hi - lo + 3.0) * i / 12.0);

    std::vector<std::vector<double>> rows;
    char title[48];
    std::snprintf(title, sizeof(title), "frozen-system level sets, T = %g", T);
    svg::Plot plot(-kBox, kBox, -kBox, kBox, title);
    for (double level : levels) {
        auto segs = contour_segments(h, kGrid, -kBox, kBox, level);
        for (const auto& s : segs) rows.push_back({level, s[0], s[1], s[2], s[3]});
        plot.add_segments(segs, "#3366aa", 0.8);
    }
    csv::write_table(csv_path, "level,x1,y1,x2,y2", rows);
    std::vector<std::string> written{csv_path};

    std::vector<std::vector<double>> eq_rows;
    for (const auto& e : eqs) {
        eq_rows.push_back({e.location.real(), e.location.imag(),
                           e.kind == model::EquilibriumKind::Center ? 0.0 : 1.0});
        plot.add_marker(e.location.real(), e.location.imag(),
                        e.kind == model::EquilibriumKind::Center ? "#117711" : "#cc2222",
                        e.kind == model::EquilibriumKind::Center);
    }
    const std::string eq_path = csv_path.size() > 4
                                    ? csv_path.substr(0, csv_path.size() - 4) + "_equilibria.csv"
                                    : csv_path + "_equilibria.csv";
    csv::write_table(eq_path, "re,im,saddle", eq_rows);
    written.push_back(eq_path);
    if (!svg_path.empty()) {
        plot.write(svg_path);
        written.push_back(svg_path);
    }
    return written;
}

std::vector<std::string> emit_figures(const std::string& outdir, Figure which) {
    std::vector<std::string> written;
    if (which == Figure::Fig1 || which == Figure::Fig2) {
        auto fa = std::async(std::launch::async,
                             [] { return integrate_primary(figure_config(-2.0)); });
        auto fb = std::async(std::launch::async,
                             [] { return integrate_primary(figure_config(-2.01)); });
        const ode::Trajectory ta = fa.get(), tb = fb.get();
        const std::string pa = outdir + "/" + (which == Figure::Fig1 ? "fig1" : "fig2") +
                               "_run_theta0_-2.csv";
        const std::string pb = outdir + "/" + (which == Figure::Fig1 ? "fig1" : "fig2") +
                               "_run_theta0_-2.01.csv";
        csv::write_trajectory(pa, ta);
        csv::write_trajectory(pb, tb);
        written.push_back(pa);
        written.push_back(pb);
        if (which == Figure::Fig1) {
            svg::Plot plot(-2.05, 1.0, -1.6, 1.6, "solutions for theta0 = -2 (blue), -2.01 (red)");
            plot.add_polyline(column(ta, 0), column(ta, 1), "#3366aa", 0.7);
            plot.add_polyline(column(ta, 0), column(ta, 2), "#88aadd", 0.7);
            plot.add_polyline(column(tb, 0), column(tb, 1), "#cc2222", 0.7);
            plot.add_polyline(column(tb, 0), column(tb, 2), "#ee9999", 0.7);
            plot.write(outdir + "/fig1_re_im.svg");
            written.push_back(outdir + "/fig1_re_im.svg");
            svg::Plot plane(-1.6, 1.6, -1.6, 1.6, "trajectories in the phi plane");
            plane.add_polyline(column(ta, 1), column(ta, 2), "#3366aa", 0.5);
            plane.add_polyline(column(tb, 1), column(tb, 2), "#cc2222", 0.5);
            plane.write(outdir + "/fig1_plane.svg");
            written.push_back(outdir + "/fig1_plane.svg");
        } else {
            svg::Plot plot(-2.05, 1.0, 0.0, 2.4, "|phi|^2 across the capture");
            plot.add_polyline(column(ta, 0), column(ta, 3), "#3366aa", 0.7);
            plot.add_polyline(column(tb, 0), column(tb, 3), "#cc2222", 0.7);
            plot.write(outdir + "/fig2_abs2.svg");
            written.push_back(outdir + "/fig2_abs2.svg");
        }
        return written;
    }
    // Fig3: the three frozen-system portraits.
    std::vector<std::future<std::vector<std::string>>> futures;
    for (double T : {-2.0, 0.0, 2.0}) {
        char suffix[16];
        std::snprintf(suffix, sizeof(suffix), "%g", T);
        const std::string base = outdir + "/fig3_portrait_T" + suffix;
        futures.push_back(std::async(std::launch::async, [base, T] {
            return write_portrait(T, base + ".csv", base + ".svg");
        }));
    }
    for (auto& f : futures) {
        auto files = f.get();
        written.insert(written.end(), files.begin(), files.end());
    }
    return written;
}

} // namespace autores::harness
