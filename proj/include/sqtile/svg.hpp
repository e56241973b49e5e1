#pragma once

#include <string>

#include "sqtile/geometry.hpp"

namespace sqtile {

// One labeled <rect> per placement, viewBox equal to the region box,
// elements ordered by (y, x), fill color a fixed hash of the side length.
// Byte-deterministic for identical tilings.
[[nodiscard]] std::string render_svg(const Tiling& t);

void write_svg_file(const Tiling& t, const std::string& path);

}  // namespace sqtile
