#ifndef AUTORES_PAINLEVE_HPP
#define AUTORES_PAINLEVE_HPP

#include "autores/ode.hpp"

namespace autores::painleve {

/// Asymptotic data of the real reduction v'' = z v - 2 v^3 at z -> -infinity:
/// v(z) ~ alpha_t (-z)^(-1/4) sin(2/3 (-z)^(3/2) + 3/4 alpha_t^2 ln(-z) + phi_t).
struct Seed {
    double alpha_t = 0.0;
    double phi_t = 0.0;
    double z0 = -40.0;  // seeding abscissa, <= -10
};

struct SeedState {
    double v;
    double dv;
};

/// Leading-order seed values (v, v') at z0. Requires z0 <= -10.
SeedState seed_at_minus_infinity(const Seed& seed);

/// Integrate v'' = z v - 2 v^3 from the seeded -infinity data up to z_end.
ode::Trajectory integrate(const Seed& seed, double z_end, const ode::Tolerances& tol);

/// Integrate from explicit (v, v') data; either direction.
ode::Trajectory integrate_from(double z0, double v, double dv, double z_end,
                               const ode::Tolerances& tol);

enum class PlusKind { Capture, Decay };

struct PlusClassification {
    PlusKind kind;
    int sign = 0;        // branch of +- sqrt(z/2), Capture only
    double rho = 0.0;    // oscillation amplitude parameter, Capture only
    double upsilon = 0.0;  // oscillation phase in [0, 2 pi), Capture only
    double rms_residual = 0.0;
};

/// Classify the z -> +infinity behaviour on the window [z1, z2] (z1 >= 10):
/// Decay when max |v| stays below 0.05 sqrt(z1/2), else fit
/// v ~ s [ sqrt(z/2) + (2z)^(-1/4) rho cos(2 sqrt2/3 z^(3/2) - 3/2 rho^2 ln z + upsilon) ].
/// Capture fitting needs the window to span at least 8 oscillation periods.
PlusClassification classify_at_plus_infinity(const ode::Trajectory& traj, double z1, double z2);

struct MinusFit {
    double alpha_t = 0.0;
    double phi_t = 0.0;
    double rms_residual = 0.0;
    bool identifiable = true;  // false when alpha_t ~ 0 leaves phi_t undetermined
};

/// Least-squares fit of the -infinity form on [z1, z2] (z2 <= -10, >= 8 periods).
MinusFit fit_minus_infinity(const ode::Trajectory& traj, double z1, double z2);

} // namespace autores::painleve

#endif
