#ifndef AUTORES_SVG_HPP
#define AUTORES_SVG_HPP

#include <array>
#include <string>
#include <vector>

namespace autores::svg {

/// Minimal deterministic line-plot writer: fixed viewport, polylines and
/// point markers in data coordinates, no external plotting stack.
class Plot {
public:
    Plot(double x_min, double x_max, double y_min, double y_max, std::string title = "");

    void add_polyline(const std::vector<double>& x, const std::vector<double>& y,
                      const std::string& color, double width = 1.0);
    void add_marker(double x, double y, const std::string& color, bool filled);

    /// Batch of disconnected segments {x1, y1, x2, y2} as one path element.
    void add_segments(const std::vector<std::array<double, 4>>& segments,
                      const std::string& color, double width = 1.0);

    void write(const std::string& path) const;

private:
    double px(double x) const;
    double py(double y) const;

    double x_min_, x_max_, y_min_, y_max_;
    std::string title_;
    std::vector<std::string> body_;
};

} // namespace autores::svg

#endif
