#ifndef AUTORES_CSV_HPP
#define AUTORES_CSV_HPP

#include <string>
#include <vector>

#include "autores/ode.hpp"

namespace autores::csv {

/// Format with 17 significant digits (shortest round-trip for doubles).
std::string number(double v);

/// Trajectory file: header "theta,re,im,abs2" for the primary equation or
/// "z,v,dv" for the layer, LF line endings, one row per accepted step.
void write_trajectory(const std::string& path, const ode::Trajectory& traj);

/// Generic table writer, same formatting rules.
void write_table(const std::string& path, const std::string& header,
                 const std::vector<std::vector<double>>& rows);

} // namespace autores::csv

#endif
