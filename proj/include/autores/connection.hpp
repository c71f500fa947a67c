#ifndef AUTORES_CONNECTION_HPP
#define AUTORES_CONNECTION_HPP

#include <array>
#include <complex>

#include "autores/wkb_pre.hpp"

namespace autores::connection {

/// The two source readings of the additive constant in the post-capture
/// phase formula: 7/2 rho^2 (TheoremOneForm) vs 7/2 rho^2 ln 2
/// (TheoremTwoForm). Arbitrated by the acceptance calibration.
enum class ConstantVariant { TheoremOneForm, TheoremTwoForm };

/// p = sqrt(exp(pi a^2) - 1) exp(i [3/2 a^2 ln 2 - pi/4 - arg Gamma(i a^2/2) - phi10]).
std::complex<double> compute_p(const wkb_pre::PreCaptureParams& pre);

/// The two phases (kappa = 0, 1), each in [0, 2 pi), at which Im p = 0 and the
/// layer solution decays instead of being captured. They differ by exactly pi.
std::array<double, 2> special_phases(double alpha);

struct RhoUpsilon {
    double rho2;
    double upsilon;  // in [0, 2 pi)
};

/// Growing-branch parameters from p. Throws SpecialPhase when Im p = 0
/// (within 1e-12) and NegativeRho2 when the formula leaves its regime.
RhoUpsilon rho_upsilon(std::complex<double> p, ConstantVariant variant);

struct Result {
    std::complex<double> p;
    bool special = false;  // Im p = 0: decay line, no capture parameters
    double rho2 = 0.0;
    double upsilon = 0.0;
    double A00 = 0.0;
    double phi00 = 0.0;
    int branch_j = 0;  // 2 when Im p > 0, 3 when Im p < 0
};

/// Full pre -> post parameter map: A00 = rho, phi00 = upsilon, branch from
/// the sign of Im p.
Result capture_params(const wkb_pre::PreCaptureParams& pre, ConstantVariant variant);

} // namespace autores::connection

#endif
