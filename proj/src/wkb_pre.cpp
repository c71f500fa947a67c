#include "autores/wkb_pre.hpp"

#include <cmath>

#include "autores/errors.hpp"

namespace autores::wkb_pre {

namespace {

void require_domain(double theta) {
    if (!(theta < -1.0)) throw OutOfDomain("wkb_pre: requires theta < -1");
}

double log_ratio(double theta) {
    // ln|(theta-1)/(theta+1)|; both factors negative for theta < -1.
    return std::log(std::abs((theta - 1.0) / (theta + 1.0)));
}

} // namespace

Omega omega_pre(double theta) {
    require_domain(theta);
    const double root = std::sqrt(theta * theta - 1.0);
    // theta + root lies in (-1, 0) here; the log is taken of the magnitude,
    // which equals -ln(-theta + root).
    const double omega = 0.5 * theta * root + 0.5 * std::log(-theta + root);
    return {omega, root};
}

double phase_pre(double theta, double eps, const PreCaptureParams& p, PhaseVariant variant) {
    const double a2 = p.alpha10 * p.alpha10;
    const double lr = log_ratio(theta);
    const double base = omega_pre(theta).omega / eps + p.phi10;
    if (variant == PhaseVariant::TheoremForm) return base + a2 * (2.0 * theta + 2.0 * lr);
    return base - a2 * (theta + lr);
}

model::Phi leading_profile(double theta, double s, PhaseVariant variant) {
    require_domain(theta);
    const double ratio = std::abs((theta - 1.0) / (theta + 1.0));
    const double rq = std::pow(ratio, 0.25);
    const double im = (variant == PhaseVariant::TheoremForm ? 1.0 : -1.0) * std::cos(s) / rq;
    return {rq * std::sin(s), im};
}

model::Phi eval(double theta, double eps, const PreCaptureParams& p, PhaseVariant variant) {
    const double s = phase_pre(theta, eps, p, variant);
    return std::sqrt(eps) * p.alpha10 * leading_profile(theta, s, variant);
}

double validity_margin(double theta, double eps) {
    return std::pow(eps, -2.0 / 3.0) * (-1.0 - theta);
}

} // namespace autores::wkb_pre
