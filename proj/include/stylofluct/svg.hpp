#ifndef STYLOFLUCT_SVG_HPP
#define STYLOFLUCT_SVG_HPP

#include <string>
#include <vector>

namespace stylofluct {

struct ScatterPoint {
    double x = 0.0;
    double y = 0.0;
    std::string label;  // series (color) key
};

// Minimal self-contained scatter plot; one color per label, legend in the
// top-right corner. Valid XML, deterministic output.
std::string scatter_svg(const std::vector<ScatterPoint>& points, const std::string& x_axis,
                        const std::string& y_axis, int width = 640, int height = 480);

}  // namespace stylofluct

#endif
