#ifndef AUTORES_SPECIAL_HPP
#define AUTORES_SPECIAL_HPP

#include <complex>

namespace autores::special {

/// log Gamma(z), the analytic continuation that is real on the positive real
/// axis (so exp(log_gamma(z)) = Gamma(z) and the branch is continuous on the
/// imaginary axis away from 0). Throws PoleAtNonPositiveInteger at the poles.
std::complex<double> log_gamma(std::complex<double> z);

/// arg Gamma(i x) for real x != 0, on the same continuous branch.
double arg_gamma_imag(double x);

} // namespace autores::special

#endif
