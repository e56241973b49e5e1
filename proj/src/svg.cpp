#include "sqtile/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sqtile {

namespace {

int side_hue(Int side) {
    return static_cast<int>((static_cast<std::uint64_t>(side) * 2654435761ULL) % 360);
}

std::string fixed1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Tiling& t) {
    Box rb = region_box(t.region);
    std::vector<Placement> squares = t.squares;
    std::sort(squares.begin(), squares.end(), [](const Placement& a, const Placement& b) {
        return std::tie(a.y, a.x) < std::tie(b.y, b.x);
    });

    double stroke = std::max<double>(1.0, static_cast<double>(std::max(rb.width(), rb.height())) / 512.0);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << rb.x0 << " " << rb.y0 << " "
        << rb.width() << " " << rb.height() << "\">\n";
    for (const auto& p : squares) {
        // Flip to SVG's downward y-axis so the origin row renders at the bottom.
        Int svg_y = rb.y0 + rb.y1 - p.y - p.side;
        out << "  <rect x=\"" << p.x << "\" y=\"" << svg_y << "\" width=\"" << p.side
            << "\" height=\"" << p.side << "\" fill=\"hsl(" << side_hue(p.side)
            << ",62%,78%)\" stroke=\"#222\" stroke-width=\"" << fixed1(stroke) << "\"/>\n";
        double cx = static_cast<double>(p.x) + static_cast<double>(p.side) / 2.0;
        double cy = static_cast<double>(svg_y) + static_cast<double>(p.side) / 2.0;
        out << "  <text x=\"" << fixed1(cx) << "\" y=\"" << fixed1(cy) << "\" font-size=\""
            << fixed1(static_cast<double>(p.side) * 0.35)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#111\">" << p.side
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_svg_file(const Tiling& t, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    file << render_svg(t);
    if (!file) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace sqtile
