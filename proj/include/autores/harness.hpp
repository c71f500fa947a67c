#ifndef AUTORES_HARNESS_HPP
#define AUTORES_HARNESS_HPP

#include <map>
#include <optional>
#include <string>

#include "autores/connection.hpp"
#include "autores/model.hpp"
#include "autores/ode.hpp"
#include "autores/wkb_post.hpp"
#include "autores/wkb_pre.hpp"

namespace autores::harness {

struct RunConfig {
    double eps = 0.01;
    double theta0 = -3.0;
    double theta1 = 2.0;
    std::optional<model::Phi> initial_phi;                       // raw Cauchy data, or
    std::optional<wkb_pre::PreCaptureParams> initial_params;     // WKB-seeded start
    wkb_pre::PhaseVariant pre_variant = wkb_pre::PhaseVariant::SectionForm;
    connection::ConstantVariant const_variant = connection::ConstantVariant::TheoremTwoForm;
    wkb_post::EquilibriumVariant eq_variant = wkb_post::EquilibriumVariant::FullRoot;
    ode::Tolerances tol{1e-9, 1e-9, 0.05, 1e-14};
    std::optional<std::pair<double, double>> fit_window;  // default [0.5, 1.5]
};

struct ScatteringReport {
    double eps = 0.0;
    std::optional<wkb_pre::PreCaptureParams> pre;
    std::optional<connection::Result> predicted;
    std::optional<wkb_post::PostCaptureParams> measured;
    std::optional<double> theta_capture;
    std::map<std::string, std::string> variant_resolution;
    std::map<std::string, double> residuals;
};

/// Integrate the primary equation for the configured Cauchy data.
ode::Trajectory integrate_primary(const RunConfig& cfg);

/// Capture detection: |phi|^2 >= 0.5 (1+theta) over the trailing window of
/// width 0.5 ending at the final theta (which must be >= 0). Returns the
/// first theta from which the criterion holds continuously, or nothing.
std::optional<double> detect_capture(const ode::Trajectory& traj, double factor = 0.5);

/// Full experiment: seed, integrate, detect, fit, predict, compare.
ScatteringReport run_scattering(const RunConfig& cfg);
ScatteringReport run_scattering(const RunConfig& cfg, const ode::Trajectory& traj);

std::string report_to_json(const ScatteringReport& report);

enum class Figure { Fig1, Fig2, Fig3 };

/// Reproduce the observational figures: sensitivity of capture to the start
/// point (fig1), |phi|^2 across the capture (fig2), frozen-system phase
/// portraits (fig3). Writes CSV data files plus native SVG plots.
std::vector<std::string> emit_figures(const std::string& outdir, Figure which);

/// Marching-squares level sets of H(T, .) on a 600x600 grid over
/// [-2.2, 2.2]^2 with equilibria markers. Empty svg_path skips the plot.
std::vector<std::string> write_portrait(double T, const std::string& csv_path,
                                        const std::string& svg_path);

} // namespace autores::harness

#endif
