#include "autores/ode.hpp"

#include <algorithm>

namespace autores::ode {

void Tolerances::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(max_step > 0.0) || !(min_step > 0.0))
        throw ValidationError("Tolerances: all fields must be strictly positive");
    if (!(min_step < max_step))
        throw ValidationError("Tolerances: min_step must be below max_step");
}

std::size_t Trajectory::locate(double t) const {
    if (points.size() < 2) throw ValidationError("Trajectory::locate: need at least 2 samples");
    const bool fwd = points.back() > points.front();
    auto it = fwd ? std::upper_bound(points.begin(), points.end(), t)
                  : std::upper_bound(points.begin(), points.end(), t, std::greater<double>());
    std::size_t i = static_cast<std::size_t>(it - points.begin());
    if (i == 0) return 0;
    if (i >= points.size()) return points.size() - 2;
    return i - 1;
}

std::vector<double> Trajectory::interpolate(double t) const {
    const std::size_t i = locate(t);
    const double t0 = points[i], t1 = points[i + 1];
    const double w = (t1 == t0) ? 0.0 : (t - t0) / (t1 - t0);
    std::vector<double> out(dim);
    auto s0 = state(i), s1 = state(i + 1);
    for (std::size_t d = 0; d < dim; ++d) out[d] = s0[d] + w * (s1[d] - s0[d]);
    return out;
}

} // namespace autores::ode
