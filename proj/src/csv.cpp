#include "autores/csv.hpp"

#include <cstdio>
#include <fstream>

namespace autores::csv {

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open(const std::string& path) {
    std::ofstream f(path, std::ios::binary);  // keep LF endings everywhere
    if (!f) throw std::runtime_error("csv: cannot open " + path);
    return f;
}

} // namespace

void write_trajectory(const std::string& path, const ode::Trajectory& traj) {
    auto f = open(path);
    const bool layer = traj.equation_id == "painleve2";
    f << (layer ? "z,v,dv" : "theta,re,im,abs2") << "\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        auto s = traj.state(i);
        f << number(traj.points[i]);
        for (double v : s) f << "," << number(v);
        if (!layer) {
            double abs2 = 0.0;
            for (double v : s) abs2 += v * v;
            f << "," << number(abs2);
        }
        f << "\n";
    }
}

void write_table(const std::string& path, const std::string& header,
                 const std::vector<std::vector<double>>& rows) {
    auto f = open(path);
    f << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) f << ",";
            f << number(row[i]);
        }
        f << "\n";
    }
}

} // namespace autores::csv
