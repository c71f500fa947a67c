#ifndef AUTORES_WKB_PRE_HPP
#define AUTORES_WKB_PRE_HPP

#include "autores/model.hpp"

namespace autores::wkb_pre {

/// Parameters of the small oscillating solution before the capture.
struct PreCaptureParams {
    double alpha10 = 0.0;  // amplitude parameter, >= 0
    double phi10 = 0.0;    // phase parameter, radians
};

/// The source text gives two readings of the leading term and of its slow
/// phase correction; they are kept side by side and arbitrated numerically.
///  - TheoremForm:  [r^(1/4) sin s + i r^(-1/4) cos s],
///                  s = w/eps + phi10 + a^2 (2 theta + 2 ln|r|)
///  - SectionForm:  [r^(1/4) sin s - i r^(-1/4) cos s],
///                  s = w/eps + phi10 - a^2 (theta + ln|r|)
/// with r = (theta-1)/(theta+1).
enum class PhaseVariant { TheoremForm, SectionForm };

struct Omega {
    double omega;        // 1/2 theta sqrt(theta^2-1) - 1/2 ln|theta + sqrt(theta^2-1)|
    double omega_prime;  // sqrt(theta^2 - 1), reported as magnitude
};

/// Fast phase and local frequency for theta < -1.
Omega omega_pre(double theta);

/// Slow phase s at theta, including the amplitude-dependent correction.
double phase_pre(double theta, double eps, const PreCaptureParams& p, PhaseVariant variant);

/// Leading-order bracket at a forced phase value s (no eps^(1/2) alpha factor).
model::Phi leading_profile(double theta, double s, PhaseVariant variant);

/// Full leading-order WKB evaluation eps^(1/2) alpha * profile(theta, s).
model::Phi eval(double theta, double eps, const PreCaptureParams& p, PhaseVariant variant);

/// eps^(-2/3) (-1 - theta); callers treat margin >= 10 as inside validity.
double validity_margin(double theta, double eps);

} // namespace autores::wkb_pre

#endif
