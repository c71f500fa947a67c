#include "autores/svg.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace autores::svg {

namespace {

constexpr double kWidth = 720.0, kHeight = 540.0, kMargin = 48.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

Plot::Plot(double x_min, double x_max, double y_min, double y_max, std::string title)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), title_(std::move(title)) {}

double Plot::px(double x) const {
    return kMargin + (x - x_min_) / (x_max_ - x_min_) * (kWidth - 2.0 * kMargin);
}

double Plot::py(double y) const {
    return kHeight - kMargin - (y - y_min_) / (y_max_ - y_min_) * (kHeight - 2.0 * kMargin);
}

void Plot::add_polyline(const std::vector<double>& x, const std::vector<double>& y,
                        const std::string& color, double width) {
    if (x.size() != y.size() || x.empty()) return;
    std::string pts;
    for (std::size_t i = 0; i < x.size(); ++i) {
        pts += fmt(px(x[i]));
        pts += ",";
        pts += fmt(py(y[i]));
        if (i + 1 < x.size()) pts += " ";
    }
    body_.push_back("<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                    fmt(width) + "\" points=\"" + pts + "\"/>");
}

void Plot::add_segments(const std::vector<std::array<double, 4>>& segments,
                        const std::string& color, double width) {
    if (segments.empty()) return;
    std::string d;
    for (const auto& s : segments) {
        d += "M" + fmt(px(s[0])) + " " + fmt(py(s[1])) + "L" + fmt(px(s[2])) + " " +
             fmt(py(s[3]));
    }
    body_.push_back("<path fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) +
                    "\" d=\"" + d + "\"/>");
}

void Plot::add_marker(double x, double y, const std::string& color, bool filled) {
    if (filled) {
        body_.push_back("<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
                        "\" r=\"4\" fill=\"" + color + "\"/>");
    } else {
        const double cx = px(x), cy = py(y), d = 4.0;
        body_.push_back("<path stroke=\"" + color + "\" stroke-width=\"1.5\" d=\"M" +
                        fmt(cx - d) + " " + fmt(cy - d) + " L" + fmt(cx + d) + " " + fmt(cy + d) +
                        " M" + fmt(cx - d) + " " + fmt(cy + d) + " L" + fmt(cx + d) + " " +
                        fmt(cy - d) + "\"/>");
    }
}

void Plot::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("svg: cannot open " + path);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << " " << fmt(kHeight) << "\">\n";
    f << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\""
      << fmt(kWidth - 2 * kMargin) << "\" height=\"" << fmt(kHeight - 2 * kMargin)
      << "\" fill=\"white\" stroke=\"black\"/>\n";
    if (!title_.empty())
        f << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(kMargin - 12)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << title_
          << "</text>\n";
    for (const auto& el : body_) f << el << "\n";
    f << "</svg>\n";
}

} // namespace autores::svg
