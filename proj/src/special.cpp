#include "autores/special.hpp"

#include <cmath>
#include <numbers>

#include "autores/errors.hpp"

namespace autores::special {

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Valid for Re z >= 0.5; analytic there and real on the positive real axis.
std::complex<double> log_gamma_right(std::complex<double> z) {
    std::complex<double> a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z - 1.0 + static_cast<double>(i));
    const std::complex<double> t = z + (kLanczosG - 0.5);
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return half_log_2pi + (z - 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleAtNonPositiveInteger("log_gamma: pole at z = " + std::to_string(z.real()));
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Pull the argument into the right half-plane: log G(z) = log G(z+m) - sum log(z+k).
    // Principal logs keep the branch continuous off the negative real axis.
    const int m = static_cast<int>(std::ceil(0.5 - z.real()));
    std::complex<double> shift = 0.0;
    for (int k = 0; k < m; ++k) shift += std::log(z + static_cast<double>(k));
    return log_gamma_right(z + static_cast<double>(m)) - shift;
}

double arg_gamma_imag(double x) {
    if (x == 0.0) throw PoleAtNonPositiveInteger("arg_gamma_imag: pole at 0");
    return log_gamma(std::complex<double>(0.0, x)).imag();
}

} // namespace autores::special
