#ifndef AUTORES_MODEL_HPP
#define AUTORES_MODEL_HPP

#include <array>
#include <complex>
#include <vector>

namespace autores::model {

using Phi = std::complex<double>;

/// d(phi)/d(theta) for i*eps*phi' + (-theta + |phi|^2) phi - conj(phi) = 0.
Phi primary_rhs(double theta, Phi phi, double eps);

/// Same vector field with the drift frozen at theta = T.
Phi frozen_rhs(double T, Phi phi, double eps);

/// H = -1/2 |phi|^4 + T |phi|^2 + 1/2 (phi^2 + conj(phi)^2); conserved by the
/// frozen flow.
double hamiltonian(double T, Phi phi);

enum class EquilibriumKind { Center, Saddle };

struct Equilibrium {
    Phi location;
    EquilibriumKind kind;
    int family;  // 1: origin, 2/3: +-sqrt(1+T), 4/5: +-i sqrt(T-1)
};

/// All critical points of H at drift value T, classified by the Hessian
/// signature. Refuses T within 1e-8 of the bifurcation values +-1.
std::vector<Equilibrium> equilibria(double T);

struct ScaledState {
    double eta = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// Resonant-layer system: x' = -2y + eps^(2/3)(eta - x^2) y - eps^(4/3) y^3,
/// y' = -(eta - x^2) x + eps^(2/3) y^2 x. At eps = 0 this is the leading
/// layer system whose second-order form reduces to Painleve-2.
std::array<double, 2> perturbed_painleve_rhs(const ScaledState& s, double eps);

/// theta + 1 = eps^(2/3) eta, phi = eps^(1/3) x + i eps^(2/3) y.
ScaledState to_layer(double theta, Phi phi, double eps);
std::pair<double, Phi> from_layer(const ScaledState& s, double eps);

} // namespace autores::model

#endif
