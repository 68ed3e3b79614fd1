#include "stylofluct/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace stylofluct {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string scatter_svg(const std::vector<ScatterPoint>& points, const std::string& x_axis,
                        const std::string& y_axis, int width, int height) {
    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    if (!points.empty()) {
        min_x = max_x = points[0].x;
        min_y = max_y = points[0].y;
        for (const auto& p : points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    if (max_x == min_x) max_x = min_x + 1.0;
    if (max_y == min_y) max_y = min_y + 1.0;

    const double margin = 50.0;
    const double plot_w = width - 2 * margin;
    const double plot_h = height - 2 * margin;
    auto sx = [&](double x) { return margin + (x - min_x) / (max_x - min_x) * plot_w; };
    auto sy = [&](double y) { return height - margin - (y - min_y) / (max_y - min_y) * plot_h; };

    std::set<std::string> label_set;
    for (const auto& p : points) label_set.insert(p.label);
    std::vector<std::string> labels(label_set.begin(), label_set.end());
    auto color_of = [&](const std::string& label) {
        const auto pos = std::find(labels.begin(), labels.end(), label) - labels.begin();
        return kPalette[static_cast<std::size_t>(pos) % (sizeof(kPalette) / sizeof(*kPalette))];
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(height - margin) << "\" x2=\""
        << fmt(width - margin) << "\" y2=\"" << fmt(height - margin)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin) << "\" x2=\"" << fmt(margin)
        << "\" y2=\"" << fmt(height - margin) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(width / 2.0) << "\" y=\"" << fmt(height - 10.0)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << escape_xml(x_axis) << "</text>\n";
    out << "<text x=\"15\" y=\"" << fmt(height / 2.0)
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 15 "
        << fmt(height / 2.0) << ")\">" << escape_xml(y_axis) << "</text>\n";

    for (const auto& p : points) {
        out << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y))
            << "\" r=\"4\" fill=\"" << color_of(p.label) << "\" fill-opacity=\"0.8\"/>\n";
    }

    double ly = margin;
    for (const auto& label : labels) {
        out << "<circle cx=\"" << fmt(width - margin - 110.0) << "\" cy=\"" << fmt(ly)
            << "\" r=\"5\" fill=\"" << color_of(label) << "\"/>\n";
        out << "<text x=\"" << fmt(width - margin - 100.0) << "\" y=\"" << fmt(ly + 4.0)
            << "\" font-size=\"12\">" << escape_xml(label) << "</text>\n";
        ly += 18.0;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace stylofluct
