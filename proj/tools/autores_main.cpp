// Command-line laboratory for parametric-autoresonance capture experiments.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "autores/connection.hpp"
#include "autores/csv.hpp"
#include "autores/harness.hpp"
#include "autores/painleve.hpp"
#include "autores/wkb_pre.hpp"

namespace {

using namespace autores;

struct CommonTol {
    double tol = 0.0;  // 0: per-command default
};

ode::Tolerances make_tol(double tol, double fallback, double max_step) {
    const double t = tol > 0.0 ? tol : fallback;
    return ode::Tolerances{t, t, max_step, 1e-14};
}

int run_simulate(double eps, double theta0, double theta1, double phi_re, double phi_im,
                 double tol, const std::string& out) {
    harness::RunConfig cfg;
    cfg.eps = eps;
    cfg.theta0 = theta0;
    cfg.theta1 = theta1;
    cfg.initial_phi = model::Phi(phi_re, phi_im);
    cfg.tol = make_tol(tol, 1e-9, 0.05);
    const auto traj = harness::integrate_primary(cfg);
    csv::write_trajectory(out, traj);
    std::cout << "wrote " << out << " (" << traj.size() << " samples)\n";
    return 0;
}

int run_portrait(double T, const std::string& out, const std::string& svg_path) {
    for (const auto& f : harness::write_portrait(T, out, svg_path))
        std::cout << "wrote " << f << "\n";
    return 0;
}

int run_painleve(double alpha, double phi, double z0, double z1, double tol,
                 const std::string& out) {
    painleve::Seed seed{alpha, phi, z0};
    const auto traj = painleve::integrate(seed, z1, make_tol(tol, 1e-10, 0.5));
    csv::write_trajectory(out, traj);
    std::cout << "wrote " << out << " (" << traj.size() << " samples)\n";
    return 0;
}

int run_connect(double alpha, double phi, const std::string& variant) {
    const auto cv = variant == "theorem1" ? connection::ConstantVariant::TheoremOneForm
                                          : connection::ConstantVariant::TheoremTwoForm;
    const auto res = connection::capture_params({alpha, phi}, cv);
    nlohmann::ordered_json j;
    j["alpha10"] = alpha;
    j["phi10"] = phi;
    j["p_re"] = res.p.real();
    j["p_im"] = res.p.imag();
    j["special"] = res.special;
    if (!res.special) {
        j["rho2"] = res.rho2;
        j["upsilon"] = res.upsilon;
        j["A00"] = res.A00;
        j["phi00"] = res.phi00;
        j["j"] = res.branch_j;
    }
    const auto sp = connection::special_phases(alpha);
    j["special_phases"] = {sp[0], sp[1]};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_match(double eps, double alpha, double phi, double theta0, double theta1, double tol) {
    harness::RunConfig cfg;
    cfg.eps = eps;
    cfg.theta0 = theta0;
    cfg.theta1 = theta1;
    cfg.initial_params = wkb_pre::PreCaptureParams{alpha, phi};
    cfg.tol = make_tol(tol, 1e-9, 0.05);
    const auto rep = harness::run_scattering(cfg);
    std::cout << harness::report_to_json(rep);
    return 0;
}

int run_figures(const std::string& which, const std::string& outdir) {
    harness::Figure fig;
    if (which == "fig1") fig = harness::Figure::Fig1;
    else if (which == "fig2") fig = harness::Figure::Fig2;
    else if (which == "fig3") fig = harness::Figure::Fig3;
    else throw ValidationError("figures: --which must be fig1|fig2|fig3");
    for (const auto& f : harness::emit_figures(outdir, fig)) std::cout << "wrote " << f << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parametric autoresonance capture laboratory"};
    app.set_config("--config", "", "read flags from a key=value file");
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "integrate the primary equation from Cauchy data");
    double eps = 0.01, theta0 = -2.0, theta1 = 1.0, phi_re = 0.02, phi_im = 0.0, tol = 0.0;
    std::string out = "trajectory.csv";
    sim->add_option("--eps", eps)->required();
    sim->add_option("--theta0", theta0)->required();
    sim->add_option("--theta1", theta1)->required();
    sim->add_option("--phi-re", phi_re)->required();
    sim->add_option("--phi-im", phi_im);
    sim->add_option("--tol", tol);
    sim->add_option("--out", out)->required();

    auto* por = app.add_subcommand("portrait", "level sets of the frozen Hamiltonian");
    double T = 0.0;
    std::string por_out = "portrait.csv", por_svg;
    por->add_option("--T", T)->required();
    por->add_option("--out", por_out)->required();
    por->add_option("--svg", por_svg);

    auto* pnl = app.add_subcommand("painleve", "integrate Painleve-2 from -infinity data");
    double alpha = 0.5, phi = 0.0, z0 = -40.0, z1 = 40.0;
    std::string pnl_out = "painleve.csv";
    pnl->add_option("--alpha", alpha)->required();
    pnl->add_option("--phi", phi)->required();
    pnl->add_option("--z0", z0);
    pnl->add_option("--z1", z1);
    pnl->add_option("--tol", tol);
    pnl->add_option("--out", pnl_out)->required();

    auto* con = app.add_subcommand("connect", "evaluate the connection formulas");
    double c_alpha = 0.5, c_phi = 0.0;
    std::string variant = "theorem2";
    con->add_option("--alpha", c_alpha)->required();
    con->add_option("--phi", c_phi)->required();
    con->add_option("--variant", variant)->check(CLI::IsMember({"theorem1", "theorem2"}));

    auto* mat = app.add_subcommand("match", "end-to-end scattering experiment");
    double m_eps = 0.01, m_alpha = 0.5, m_phi = 1.0, m_t0 = -3.0, m_t1 = 2.0;
    mat->add_option("--eps", m_eps)->required();
    mat->add_option("--alpha", m_alpha)->required();
    mat->add_option("--phi", m_phi)->required();
    mat->add_option("--theta0", m_t0)->required();
    mat->add_option("--theta1", m_t1)->required();
    mat->add_option("--tol", tol);

    auto* fig = app.add_subcommand("figures", "reproduce the observational figures");
    std::string which = "fig1", outdir = ".";
    fig->add_option("--which", which)->required()->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
    fig->add_option("--outdir", outdir)->required();

    try {
        app.parse(argc, argv);
        if (sim->parsed()) return run_simulate(eps, theta0, theta1, phi_re, phi_im, tol, out);
        if (por->parsed()) return run_portrait(T, por_out, por_svg);
        if (pnl->parsed()) return run_painleve(alpha, phi, z0, z1, tol, pnl_out);
        if (con->parsed()) return run_connect(c_alpha, c_phi, variant);
        if (mat->parsed()) return run_match(m_eps, m_alpha, m_phi, m_t0, m_t1, tol);
        if (fig->parsed()) return run_figures(which, outdir);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const autores::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const autores::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
