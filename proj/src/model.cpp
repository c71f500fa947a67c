#include "autores/model.hpp"

#include <cmath>

#include "autores/errors.hpp"

namespace autores::model {

Phi primary_rhs(double theta, Phi phi, double eps) {
    const Phi rest = std::conj(phi) - (-theta + std::norm(phi)) * phi;
    return Phi(0.0, -1.0 / eps) * rest;
}

Phi frozen_rhs(double T, Phi phi, double eps) { return primary_rhs(T, phi, eps); }

double hamiltonian(double T, Phi phi) {
    const double n = std::norm(phi);
    const double a = phi.real(), b = phi.imag();
    return -0.5 * n * n + T * n + (a * a - b * b);
}

namespace {

// Hessian of H in (Re phi, Im phi); definite => center, indefinite => saddle.
EquilibriumKind classify(double T, Phi p) {
    const double a = p.real(), b = p.imag();
    const double n = a * a + b * b;
    const double haa = -2.0 * n - 4.0 * a * a + 2.0 * T + 2.0;
    const double hbb = -2.0 * n - 4.0 * b * b + 2.0 * T - 2.0;
    const double hab = -4.0 * a * b;
    const double det = haa * hbb - hab * hab;
    return det > 0.0 ? EquilibriumKind::Center : EquilibriumKind::Saddle;
}

} // namespace

std::vector<Equilibrium> equilibria(double T) {
    if (std::abs(T - 1.0) < 1e-8 || std::abs(T + 1.0) < 1e-8)
        throw AtBifurcation("equilibria: T within 1e-8 of a bifurcation value (+-1)");

    std::vector<Equilibrium> out;
    out.push_back({Phi(0.0, 0.0), classify(T, Phi(0.0, 0.0)), 1});
    if (T > -1.0) {
        const double r = std::sqrt(1.0 + T);
        out.push_back({Phi(r, 0.0), classify(T, Phi(r, 0.0)), 2});
        out.push_back({Phi(-r, 0.0), classify(T, Phi(-r, 0.0)), 3});
    }
    if (T > 1.0) {
        const double s = std::sqrt(T - 1.0);
        out.push_back({Phi(0.0, s), classify(T, Phi(0.0, s)), 4});
        out.push_back({Phi(0.0, -s), classify(T, Phi(0.0, -s)), 5});
    }
    return out;
}

std::array<double, 2> perturbed_painleve_rhs(const ScaledState& s, double eps) {
    const double e23 = std::cbrt(eps) * std::cbrt(eps);
    const double e43 = e23 * e23;
    const double g = s.eta - s.x * s.x;
    return {-2.0 * s.y + e23 * g * s.y - e43 * s.y * s.y * s.y,
            -g * s.x + e23 * s.y * s.y * s.x};
}

ScaledState to_layer(double theta, Phi phi, double eps) {
    if (!(eps > 0.0)) throw ValidationError("to_layer: eps must be positive");
    const double e13 = std::cbrt(eps);
    const double e23 = e13 * e13;
    return {(theta + 1.0) / e23, phi.real() / e13, phi.imag() / e23};
}

std::pair<double, Phi> from_layer(const ScaledState& s, double eps) {
    if (!(eps > 0.0)) throw ValidationError("from_layer: eps must be positive");
    const double e13 = std::cbrt(eps);
    const double e23 = e13 * e13;
    return {-1.0 + e23 * s.eta, Phi(e13 * s.x, e23 * s.y)};
}

} // namespace autores::model
